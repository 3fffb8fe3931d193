#include "gwz/poly.hpp"

#include <sstream>

namespace gwz {

namespace {
const Rational kZero(0);
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    for (auto& c : coeffs_) c.canonicalize();
}

Polynomial Polynomial::monomial(int degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::unit_factor(int k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[0] = -1;
    v[k] = 1;
    return Polynomial(std::move(v));
}

const Rational& Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[k];
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rational> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> v(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    acc.canonicalize();
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<int>(i);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw ValidationError("negative polynomial power");
    Polynomial acc({Rational(1)});
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Polynomial Polynomial::reversed(int n) const {
    if (n < degree()) throw ValidationError("reversal bound below degree");
    std::vector<Rational> v(n + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[n - i] = coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Rational inv = 1 / leading();
    return *this * inv;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw ZeroDenominator();
    Polynomial r = *this;
    std::vector<Rational> q(std::max(0, degree() - divisor.degree() + 1), Rational(0));
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        int shift = r.degree() - divisor.degree();
        Rational c = r.leading() / divisor.leading();
        c.canonicalize();
        q[shift] = c;
        r = r - Polynomial::monomial(shift, c) * divisor;
    }
    return {Polynomial(std::move(q)), r};
}

std::optional<Polynomial> Polynomial::divexact(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c == 0) continue;
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit_coeff = (a == 1) && k > 0;
        if (!unit_coeff) out << a.get_str();
        if (k > 0) {
            if (!unit_coeff) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = y;
        y = r.is_zero() ? r : r.monic();
    }
    return x.is_zero() ? x : x.monic();
}

std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b, int count) {
    std::vector<Rational> out(count, Rational(0));
    for (int i = 0; i < count && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j < count && j < static_cast<int>(b.size()); ++j)
            out[i + j] += a[i] * b[j];
    }
    for (auto& c : out) c.canonicalize();
    return out;
}

std::vector<Rational> series_inverse(const Polynomial& p, int count) {
    if (p.coeff(0) == 0) throw ZeroDenominator();
    std::vector<Rational> inv(count, Rational(0));
    Rational c0 = 1 / p.coeff(0);
    inv[0] = c0;
    for (int k = 1; k < count; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += p.coeff(j) * inv[k - j];
        inv[k] = -acc * c0;
        inv[k].canonicalize();
    }
    return inv;
}

std::vector<Rational> series_log(const std::vector<Rational>& z, int count) {
    if (z.empty() || z[0] != 1) throw ValidationError("series_log requires constant term 1");
    std::vector<Rational> l(count, Rational(0));
    auto zc = [&](int k) { return k < static_cast<int>(z.size()) ? z[k] : Rational(0); };
    for (int k = 1; k < count; ++k) {
        Rational acc = zc(k) * k;
        for (int j = 1; j < k; ++j) acc -= l[j] * j * zc(k - j);
        l[k] = acc / k;
        l[k].canonicalize();
    }
    return l;
}

namespace {

// Faddeev-LeVerrier over integers: all divisions are exact.
std::vector<Integer> char_poly_int(const std::vector<std::vector<Integer>>& m) {
    int n = static_cast<int>(m.size());
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    std::vector<std::vector<Integer>> mk = m;
    auto trace = [&](const std::vector<std::vector<Integer>>& a) {
        Integer t = 0;
        for (int i = 0; i < n; ++i) t += a[i][i];
        return t;
    };
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // mk = m * (mk + c[n-k+1] * I)
            std::vector<std::vector<Integer>> b = mk;
            for (int i = 0; i < n; ++i) b[i][i] += c[n - k + 1];
            std::vector<std::vector<Integer>> next(n, std::vector<Integer>(n, Integer(0)));
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) {
                    if (m[i][l] == 0) continue;
                    for (int j = 0; j < n; ++j) next[i][j] += m[i][l] * b[l][j];
                }
            mk = std::move(next);
        }
        Integer t = trace(mk);
        c[n - k] = -t / k;
    }
    return c;
}

}  // namespace

Polynomial char_poly(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("char_poly of non-square matrix");
    int n = m.rows();
    Integer scale = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = lcm(scale, m.at(i, j).get_den());
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational s = m.at(i, j) * scale;
            s.canonicalize();
            a[i][j] = s.get_num();
        }
    std::vector<Integer> c = char_poly_int(a);
    // det(lambda I - M) = scale^{-n} * charpoly_int(scale * lambda)
    std::vector<Rational> coeffs(n + 1);
    Integer num = 1;  // scale^k
    Integer den = 1;
    for (int i = 0; i < n; ++i) den *= scale;
    for (int k = 0; k <= n; ++k) {
        coeffs[k] = Rational(c[k] * num) / Rational(den);
        coeffs[k].canonicalize();
        num *= scale;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial det_one_minus_u_M(const RationalMatrix& m) {
    Polynomial p = char_poly(m);
    // det(I - uM) = u^n * p(1/u)
    return p.reversed(m.rows());
}

Polynomial poly_matrix_det(std::vector<std::vector<Polynomial>> a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return Polynomial({Rational(1)});
    for (auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("poly_matrix_det requires a square matrix");

    Polynomial prev({Rational(1)});
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return {};
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Polynomial t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = t.divexact(prev);
                if (!q) throw ValidationError("Bareiss exact division failed");
                a[i][j] = std::move(*q);
            }
        prev = a[k][k];
    }
    Polynomial det = a[n - 1][n - 1];
    return sign > 0 ? det : -det;
}

RationalFunction::RationalFunction(Rational constant, Polynomial num, Polynomial den)
    : constant_(std::move(constant)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominator();
    constant_.canonicalize();
    if (constant_ == 0 || num_.is_zero()) {
        constant_ = 0;
        num_ = Polynomial({Rational(1)});
        den_ = Polynomial({Rational(1)});
        return;
    }
    // Canonical form: num and den monic and coprime, leadings folded into
    // the constant.
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = *num_.divexact(g);
        den_ = *den_.divexact(g);
    }
    constant_ *= num_.leading() / den_.leading();
    constant_.canonicalize();
    num_ = num_.monic();
    den_ = den_.monic();
}

RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(1, num, den);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    RationalFunction r = rf_normalize(num_ * rhs.num_, den_ * rhs.den_);
    return RationalFunction(r.constant() * constant_ * rhs.constant_, r.num(), r.den());
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw ZeroDenominator();
    return RationalFunction(1 / constant_, den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return reciprocal().pow(-e);
    RationalFunction acc = one();
    RationalFunction base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

RationalFunction RationalFunction::at_reciprocal_arg() const {
    if (is_zero()) return {};
    // f(1/u) = c * u^{deg den - deg num} * rev(num)(u) / rev(den)(u)
    Polynomial rn = num_.reversed(num_.degree());
    Polynomial rd = den_.reversed(den_.degree());
    int shift = den_.degree() - num_.degree();
    Polynomial n = shift >= 0 ? rn * Polynomial::monomial(shift) : rn;
    Polynomial d = shift < 0 ? rd * Polynomial::monomial(-shift) : rd;
    RationalFunction r = rf_normalize(n, d);
    return RationalFunction(r.constant() * constant_, r.num(), r.den());
}

std::vector<Rational> RationalFunction::series(int count) const {
    if (is_zero()) return std::vector<Rational>(count, Rational(0));
    std::vector<Rational> s =
        series_mul(num_.coeffs(), series_inverse(den_, count), count);
    for (auto& c : s) {
        c *= constant_;
        c.canonicalize();
    }
    return s;
}

double RationalFunction::eval_double(double x) const {
    return constant_.get_d() * num_.eval_double(x) / den_.eval_double(x);
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    out << constant_.get_str() << " * (" << num_.to_string(var) << ") / ("
        << den_.to_string(var) << ")";
    return out.str();
}

RationalFunction UnitFactoredForm::reconstruct() const {
    RationalFunction f(constant, residual_num, residual_den);
    for (auto& [k, e] : factors)
        f = f * RationalFunction::from_poly(Polynomial::unit_factor(k)).pow(e);
    return f;
}

std::string UnitFactoredForm::to_string(const std::string& var) const {
    std::ostringstream num, den;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        auto& [k, e] = *it;
        if (e == 0) continue;
        std::ostringstream& side = e > 0 ? num : den;
        side << "(" << var << "^" << k << "-1)";
        if (std::abs(e) > 1) side << "^" << std::abs(e);
    }
    if (residual_num.degree() > 0 || residual_num.coeff(0) != 1)
        num << "(" << residual_num.to_string(var) << ")";
    if (residual_den.degree() > 0 || residual_den.coeff(0) != 1)
        den << "(" << residual_den.to_string(var) << ")";

    std::string ns = num.str(), ds = den.str();
    std::ostringstream out;
    if (constant == -1)
        out << "-";
    else if (constant != 1)
        out << constant.get_str() << (ns.empty() ? "" : "*");
    out << (ns.empty() ? "1" : ns);
    if (!ds.empty()) out << "/" << ds;
    return out.str();
}

UnitFactoredForm factor_unit_basis(const RationalFunction& f, int kmax) {
    if (kmax < 1) throw ValidationError("factor_unit_basis requires kmax >= 1");
    UnitFactoredForm out;
    out.constant = f.constant();
    out.residual_num = f.num();
    out.residual_den = f.den();
    if (f.is_zero()) return out;
    for (int k = kmax; k >= 1; --k) {
        Polynomial unit = Polynomial::unit_factor(k);
        while (true) {
            auto q = out.residual_num.divexact(unit);
            if (!q) break;
            out.residual_num = std::move(*q);
            out.factors[k] += 1;
        }
        while (true) {
            auto q = out.residual_den.divexact(unit);
            if (!q) break;
            out.residual_den = std::move(*q);
            out.factors[k] -= 1;
        }
        if (out.factors.count(k) && out.factors[k] == 0) out.factors.erase(k);
    }
    return out;
}

}  // namespace gwz
