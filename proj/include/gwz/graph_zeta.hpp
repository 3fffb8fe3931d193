#pragma once

#include <string>
#include <vector>

#include "gwz/graph.hpp"
#include "gwz/matrix.hpp"
#include "gwz/poly.hpp"

namespace gwz {

// Zeta function of the Grover walk: 1 / det(I - u U_G).
RationalFunction grover_zeta(const Graph& g);

enum class IharaMethod { IharaExpression, PositiveSupport };

// Ihara zeta of G; the two methods are independent routes and must agree.
RationalFunction ihara_zeta(const Graph& g, IharaMethod method);

// N_r for r = 1..rmax by brute-force enumeration of closed backtrack-free
// arc sequences whose cyclic wrap is also backtrack-free.
std::vector<long long> reduced_cycle_counts(const Graph& g, int rmax);

struct VerificationReport {
    Polynomial lhs;  // det(I - u U)
    RationalFunction rhs;  // (1-u^2)^{m-n} det((1+u^2) I - 2u P)
    bool equal = false;
};

// Exact two-sided check of det(I - uU) = (1-u^2)^{m-n} det((1+u^2)I - 2uP).
VerificationReport konno_sato_verify(const Graph& g);

// --- Spectrum ---------------------------------------------------------------

// Exact point on the unit circle. Either lambda_P + i*b*sqrt(d) with rational
// lambda_P, b and squarefree d >= 0, or a root of unity e^{2 pi i k/n} (the
// cycle-graph case, where lambda_P = cos(2 pi k/n) leaves the quadratic
// tower).
struct Eigenvalue {
    enum class Kind { UnitQuad, RootOfUnity };
    Kind kind = Kind::UnitQuad;
    // UnitQuad fields: value = re + i * im_b * sqrt(im_d)
    Rational re;
    Rational im_b;
    long im_d = 0;
    // RootOfUnity fields: e^{2 pi i k / n}, 0 <= k < n
    int rou_k = 0;
    int rou_n = 1;

    static Eigenvalue unit_quad(Rational lambda_p, Rational b, long d);
    static Eigenvalue root_of_unity(int k, int n);
    static Eigenvalue real_unit(int pm1);  // +1 or -1

    bool operator==(const Eigenvalue&) const = default;
    bool operator<(const Eigenvalue& rhs) const;
    Eigenvalue conjugate() const;
    bool is_real_one() const;    // == +1
    bool is_real_minus_one() const;
    std::string to_string() const;
};

enum class SpectrumPart { RW, RWComplement };

struct SpectrumEntry {
    Eigenvalue value;
    int multiplicity = 0;
    SpectrumPart part = SpectrumPart::RW;
};

struct SpectrumMultiset {
    std::vector<SpectrumEntry> entries;  // sorted by eigenvalue, merged

    int total_multiplicity() const;
    // Exact product of all eigenvalues with multiplicity; the spectrum is
    // closed under conjugation so the product is rational (+-1 for Grover).
    Rational eigenvalue_product() const;
    int multiplicity_of(const Eigenvalue& v) const;
};

struct UnsupportedSpectrum : std::runtime_error {
    Polynomial p_char_poly;  // exact characteristic polynomial of P_n
    explicit UnsupportedSpectrum(Polynomial cp)
        : std::runtime_error("Spec(P) has eigenvalues outside the rational tower"),
          p_char_poly(std::move(cp)) {}
};

// Spectrum of U via the Konno-Sato mapping on Spec(P); exact multiplicities.
SpectrumMultiset grover_spectrum(const Graph& g);

struct AutomorphicWeight {
    int C = 1;   // sign in {-1, +1}
    int D = 0;   // weight: f(1/u) = C u^{-D} f(u)
    bool operator==(const AutomorphicWeight&) const = default;
};

// Solves f(1/u) = C u^{-D} f(u) exactly; throws NotAutomorphic otherwise.
AutomorphicWeight automorphic_weight(const RationalFunction& f);

}  // namespace gwz
