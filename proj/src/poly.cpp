#include "disccensus/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace disccensus {

namespace {

const mpz_class zero_z = 0;
const mpq_class zero_q = 0;

mpz_class pow_z(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

int parity_sign(unsigned long e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPoly IntPoly::monomial(int degree, const mpz_class& coeff) {
    if (degree < 0)
        throw std::invalid_argument("monomial: negative degree");
    std::vector<mpz_class> c(degree + 1);
    c[degree] = coeff;
    return IntPoly(std::move(c));
}

const mpz_class& IntPoly::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return zero_z;
    return c_[i];
}

const mpz_class& IntPoly::lc() const {
    if (c_.empty())
        throw std::invalid_argument("lc of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1)
        return IntPoly();
    std::vector<mpz_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = r * x + c_[i];
    return r;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        r *= x;
        r += c_[i];
    }
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        return IntPoly();
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const mpz_class& s) const {
    std::vector<mpz_class> c(c_);
    for (auto& x : c)
        x *= s;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    return *this * mpz_class(-1);
}

PolyDivision divide_monic(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero() || g.lc() != 1)
        throw std::invalid_argument("divide_monic: divisor must be monic");
    IntPoly r = f;
    std::vector<mpz_class> q;
    const int dg = g.degree();
    if (r.degree() >= dg)
        q.resize(r.degree() - dg + 1);
    while (!r.is_zero() && r.degree() >= dg) {
        const int shift = r.degree() - dg;
        mpz_class c = r.lc();
        q[shift] = c;
        r = r - IntPoly::monomial(shift, c) * g;
    }
    return {IntPoly(std::move(q)), std::move(r)};
}

MonicIntPoly::MonicIntPoly(IntPoly p) : p_(std::move(p)) {
    if (p_.degree() < 1)
        throw std::invalid_argument("monic polynomial must have degree >= 1");
    if (p_.lc() != 1)
        throw std::invalid_argument("polynomial is not monic");
}

MonicIntPoly::MonicIntPoly(int n, std::vector<mpz_class> low_coeffs)
    : p_(IntPoly()) {
    if (n < 1)
        throw std::invalid_argument("monic polynomial must have degree >= 1");
    if (static_cast<int>(low_coeffs.size()) != n)
        throw std::invalid_argument("expected exactly n low coefficients");
    low_coeffs.push_back(1);
    p_ = IntPoly(std::move(low_coeffs));
}

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_)
        x.canonicalize();
    normalize();
}

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

const mpq_class& RatPoly::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return zero_q;
    return c_[i];
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1)
        return RatPoly();
    std::vector<mpq_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<long>(i);
    return RatPoly(std::move(d));
}

mpq_class RatPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        r *= x;
        r += c_[i];
    }
    return r;
}

IntPoly parse_poly(const std::string& text) {
    std::vector<mpz_class> high_first;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto b = token.find_first_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("empty coefficient in polynomial text");
        const auto e = token.find_last_not_of(" \t");
        high_first.emplace_back(token.substr(b, e - b + 1));
    }
    if (high_first.empty())
        throw std::invalid_argument("empty polynomial text");
    std::reverse(high_first.begin(), high_first.end());
    return IntPoly(std::move(high_first));
}

std::string format_poly(const IntPoly& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        if (!out.empty())
            out += ',';
        out += f[i].get_str();
    }
    return out;
}

namespace {

mpz_class bareiss_det(std::vector<std::vector<mpz_class>>& m) {
    const std::size_t s = m.size();
    if (s == 0)
        return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < s; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < s && m[r][k] == 0)
                ++r;
            if (r == s)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < s; ++i) {
            for (std::size_t j = k + 1; j < s; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[s - 1][s - 1];
}

mpq_class gauss_det(std::vector<std::vector<mpq_class>>& m) {
    const std::size_t s = m.size();
    if (s == 0)
        return 1;
    int sign = 1;
    mpq_class det = 1;
    for (std::size_t k = 0; k < s; ++k) {
        std::size_t r = k;
        while (r < s && m[r][k] == 0)
            ++r;
        if (r == s)
            return 0;
        if (r != k) {
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < s; ++i) {
            mpq_class factor = m[i][k] / m[k][k];
            for (std::size_t j = k; j < s; ++j)
                m[i][j] -= factor * m[k][j];
        }
    }
    return sign * det;
}

template <typename Poly, typename Cell>
std::vector<std::vector<Cell>> sylvester(const Poly& f, const Poly& g) {
    const int m = f.degree();
    const int n = g.degree();
    const std::size_t s = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Cell>> mat(s, std::vector<Cell>(s, Cell(0)));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k)
            mat[row][row + k] = f[m - k];
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            mat[n + row][row + k] = g[n - k];
    return mat;
}

} // namespace

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant requires nonzero polynomials");
    if (f.degree() == 0)
        return pow_z(f[0], g.degree());
    if (g.degree() == 0)
        return pow_z(g[0], f.degree());
    auto mat = sylvester<IntPoly, mpz_class>(f, g);
    return bareiss_det(mat);
}

mpz_class discriminant(const MonicIntPoly& f) {
    const int n = f.degree();
    if (n < 2)
        throw std::invalid_argument("discriminant requires degree >= 2");
    IntPoly d = f.poly().derivative();
    mpz_class res = resultant(f.poly(), d);
    return parity_sign(static_cast<unsigned long>(n) * (n - 1) / 2) * res;
}

mpq_class discriminant(const RatPoly& f) {
    const int n = f.degree();
    if (n < 2)
        throw std::invalid_argument("discriminant requires degree >= 2");
    if (f[n] != 1)
        throw std::invalid_argument("rational discriminant requires monic input");
    RatPoly d = f.derivative();
    auto mat = sylvester<RatPoly, mpq_class>(f, d);
    mpq_class res = gauss_det(mat);
    return parity_sign(static_cast<unsigned long>(n) * (n - 1) / 2) * res;
}

mpz_class delta_n(int n, const mpz_class& a, const mpz_class& b) {
    if (n < 2)
        throw std::invalid_argument("delta_n requires n >= 2");
    return pow_z(mpz_class(n - 1), n - 1) * pow_z(a, n) +
           pow_z(mpz_class(n), n) * pow_z(b, n - 1);
}

mpz_class trinomial_disc(int n, const mpz_class& a, const mpz_class& b) {
    if (n < 2)
        throw std::invalid_argument("trinomial_disc requires n >= 2");
    mpz_class body = pow_z(mpz_class(n), n) * pow_z(b, n - 1) +
                     parity_sign(n - 1) * pow_z(mpz_class(n - 1), n - 1) * pow_z(a, n);
    return parity_sign(static_cast<unsigned long>(n) * (n - 1) / 2) * body;
}

mpz_class quadrinomial_disc(int n, const mpz_class& a, const mpz_class& b) {
    if (n < 4)
        throw std::invalid_argument("quadrinomial_disc requires n >= 4");
    if (n % 3 == 0)
        throw std::invalid_argument("quadrinomial_disc requires gcd(n, 3) = 1");
    mpz_class body = pow_z(mpz_class(n), n) * pow_z(b, n - 3) +
                     parity_sign(n + 1) * pow_z(mpz_class(n - 3), n - 3) * 27 *
                         pow_z(a, n);
    return parity_sign(static_cast<unsigned long>(n) * (n - 1) / 2) * b * b * body;
}

RatPoly tschirnhaus_transform(const MonicIntPoly& f, const mpq_class& u,
                              const mpq_class& v) {
    if (u == 0)
        throw std::invalid_argument("tschirnhaus_transform requires u != 0");
    const int n = f.degree();
    std::vector<mpq_class> acc(n + 1, mpq_class(0));
    // (X + v)^i expanded iteratively; term i contributes a_i u^{n-i} (X+v)^i.
    std::vector<mpq_class> binom{mpq_class(1)};
    mpq_class ufac = 1;
    for (int i = 0; i < n; ++i)
        ufac *= u;
    for (int i = 0; i <= n; ++i) {
        mpq_class scale = f[i] * ufac;
        for (int k = 0; k <= i; ++k)
            acc[k] += scale * binom[k];
        // advance binom to (X+v)^{i+1}
        std::vector<mpq_class> next(binom.size() + 1, mpq_class(0));
        for (std::size_t k = 0; k < binom.size(); ++k) {
            next[k] += binom[k] * v;
            next[k + 1] += binom[k];
        }
        binom = std::move(next);
        ufac /= u;
    }
    return RatPoly(std::move(acc));
}

mpq_class transform_coefficient(const MonicIntPoly& f, int j, const mpq_class& u,
                                const mpq_class& v) {
    const int n = f.degree();
    if (j < 0 || j > n)
        throw std::invalid_argument("transform_coefficient: j out of range");
    if (u == 0)
        throw std::invalid_argument("transform_coefficient requires u != 0");
    IntPoly d = f.poly();
    for (int k = 0; k < n - j; ++k)
        d = d.derivative();
    mpq_class val = d.eval(mpq_class(v / u));
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n - j));
    mpq_class upow = 1;
    for (int k = 0; k < j; ++k)
        upow *= u;
    mpq_class r = upow * val / mpq_class(fact);
    r.canonicalize();
    return r;
}

namespace {

// Divided-difference interpolation at integer nodes 0..d, returning monomial
// coefficients (constant first).
std::vector<mpq_class> newton_interpolate(std::vector<mpq_class> v) {
    const std::size_t d = v.size() - 1;
    for (std::size_t k = 1; k <= d; ++k)
        for (std::size_t i = d; i >= k; --i)
            v[i] = (v[i] - v[i - 1]) / static_cast<long>(k);
    std::vector<mpq_class> poly(v.size(), mpq_class(0));
    std::size_t deg = 0;
    poly[0] = v[d];
    for (std::size_t i = d; i-- > 0;) {
        // poly <- poly * (X - i) + v[i]
        for (std::size_t k = deg + 1; k > 0; --k)
            poly[k] = poly[k - 1] - poly[k] * static_cast<long>(i);
        poly[0] = v[i] - poly[0] * static_cast<long>(i);
        ++deg;
    }
    return poly;
}

MonomialList build_disc_multivariate(int n) {
    const int nodes = n + 1;
    std::size_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= nodes;
    std::vector<mpq_class> table(total);
    std::vector<mpz_class> coeffs(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t t = idx;
        for (int j = 0; j < n; ++j) {
            coeffs[j] = static_cast<long>(t % nodes);
            t /= nodes;
        }
        table[idx] = mpq_class(discriminant(MonicIntPoly(n, coeffs)));
    }
    // Interpolate one axis at a time. Axis j has stride nodes^j.
    std::size_t stride = 1;
    for (int j = 0; j < n; ++j) {
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / stride) % nodes != 0)
                continue;
            std::vector<mpq_class> line(nodes);
            for (int i = 0; i < nodes; ++i)
                line[i] = table[base + i * stride];
            line = newton_interpolate(std::move(line));
            for (int i = 0; i < nodes; ++i)
                table[base + i * stride] = line[i];
        }
        stride *= nodes;
    }
    MonomialList list;
    list.n = n;
    const long weight_target = static_cast<long>(n) * (n - 1);
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (table[idx] == 0)
            continue;
        if (table[idx].get_den() != 1)
            throw std::logic_error("discriminant interpolation gave a fraction");
        Monomial m;
        m.exponents.resize(n);
        std::size_t t = idx;
        long weight = 0;
        for (int j = 0; j < n; ++j) {
            m.exponents[j] = static_cast<int>(t % nodes);
            t /= nodes;
            if (m.exponents[j] > n)
                throw std::logic_error("per-variable degree exceeds n");
            weight += static_cast<long>(m.exponents[j]) * (n - j);
        }
        if (weight != weight_target)
            throw std::logic_error("monomial violates weighted homogeneity");
        m.coefficient = table[idx].get_num();
        list.entries.push_back(std::move(m));
    }
    return list;
}

} // namespace

const MonomialList& disc_multivariate(int n) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("disc_multivariate supports 2 <= n <= 5");
    static std::map<int, MonomialList> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, build_disc_multivariate(n)).first;
    return it->second;
}

mpz_class evaluate_monomials(const MonomialList& list,
                             const std::vector<mpz_class>& values) {
    if (static_cast<int>(values.size()) != list.n)
        throw std::invalid_argument("evaluate_monomials: wrong value count");
    mpz_class total = 0;
    for (const auto& m : list.entries) {
        mpz_class term = m.coefficient;
        for (int j = 0; j < list.n; ++j)
            if (m.exponents[j] != 0)
                term *= pow_z(values[j], m.exponents[j]);
        total += term;
    }
    return total;
}

LeadingForm specialized_disc_leading(int n, const std::vector<mpz_class>& upper,
                                     const mpz_class& c0, const mpz_class& c1) {
    if (n < 3)
        throw std::invalid_argument("specialized_disc_leading requires n >= 3");
    if (static_cast<int>(upper.size()) != n - 2)
        throw std::invalid_argument("expected coefficients a_2..a_{n-1}");
    std::vector<mpq_class> values(n + 1);
    for (int t = 0; t <= n; ++t) {
        std::vector<mpz_class> coeffs(n);
        coeffs[0] = t;
        coeffs[1] = c0 * t + c1;
        for (int j = 2; j < n; ++j)
            coeffs[j] = upper[j - 2];
        values[t] = mpq_class(discriminant(MonicIntPoly(n, coeffs)));
    }
    std::vector<mpq_class> poly = newton_interpolate(std::move(values));
    LeadingForm form;
    for (const auto& c : poly) {
        if (c.get_den() != 1)
            throw std::logic_error("specialized interpolation gave a fraction");
        form.coefficients.push_back(c.get_num());
    }
    while (!form.coefficients.empty() && form.coefficients.back() == 0)
        form.coefficients.pop_back();
    if (form.coefficients.empty())
        throw std::logic_error("specialized discriminant vanished identically");
    form.degree = static_cast<int>(form.coefficients.size()) - 1;
    form.leading = form.coefficients.back();
    int expect_degree;
    mpz_class expect_leading;
    if (c0 != 0) {
        expect_degree = n;
        expect_leading = parity_sign(static_cast<unsigned long>(n - 1) * (n - 2) / 2) *
                         pow_z(mpz_class(n - 1), n - 1) * pow_z(c0, n);
    } else {
        expect_degree = n - 1;
        expect_leading = parity_sign(static_cast<unsigned long>(n) * (n - 1) / 2) *
                         pow_z(mpz_class(n), n);
    }
    if (form.degree != expect_degree || form.leading != expect_leading)
        throw std::logic_error("specialized discriminant leading form mismatch");
    return form;
}

} // namespace disccensus
