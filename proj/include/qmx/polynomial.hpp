#pragma once

// Univariate polynomials over a scalar domain, low-to-high coefficients with
// no stored trailing zeros (the zero polynomial has an empty vector).

#include <string>
#include <vector>

#include "qmx/scalar.hpp"

namespace qmx {

template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }
    Poly(std::initializer_list<K> c) : c_(c) { trim(); }

    static Poly x() { return Poly({FT<K>::zero(), FT<K>::one()}); }
    static Poly constant(K c) { return Poly({std::move(c)}); }
    static Poly monomial(int deg, K c = FT<K>::one()) {
        std::vector<K> v(deg + 1, FT<K>::zero());
        v[deg] = std::move(c);
        return Poly(std::move(v));
    }

    int degree() const { return (int)c_.size() - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int k) const {
        return k >= 0 && k < (int)c_.size() ? c_[k] : FT<K>::zero();
    }
    const K& lc() const { return c_.back(); }

    bool is_monic() const { return !c_.empty() && c_.back() == FT<K>::one(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), FT<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), FT<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<K> r = a.c_;
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, FT<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (FT<K>::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const K& c, const Poly& a) {
        std::vector<K> r = a.c_;
        for (auto& x : r) x = c * x;
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; the divisor must have an invertible leading
    // coefficient (any nonzero one over a field).
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) fail("invalid-argument", "polynomial division by zero");
        std::vector<K> rem = a.c_;
        int db = b.degree();
        if (a.degree() < db) return {Poly(), a};
        std::vector<K> quo(a.degree() - db + 1, FT<K>::zero());
        K blc_inv = FT<K>::one() / b.lc();
        for (int k = a.degree(); k >= db; --k) {
            K f = rem[k] * blc_inv;
            if (FT<K>::is_zero(f)) continue;
            quo[k - db] = f;
            for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
            rem[k] = FT<K>::zero();
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return (FT<K>::one() / lc()) * *this;
    }

    K eval(const K& x) const {
        K v = FT<K>::zero();
        for (int k = degree(); k >= 0; --k) v = v * x + c_[k];
        return v;
    }

    Poly derivative() const {
        if (degree() < 1) return Poly();
        std::vector<K> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = FT<K>::from_int((long)i) * c_[i];
        return Poly(std::move(r));
    }

    // p(x + s)
    Poly shift(const K& s) const {
        Poly xs({s, FT<K>::one()});
        Poly r;
        for (int k = degree(); k >= 0; --k) r = r * xs + constant(c_[k]);
        return r;
    }

    Poly conj_coeffs() const {
        std::vector<K> r = c_;
        for (auto& x : r) x = FT<K>::conj(x);
        return Poly(std::move(r));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            if (FT<K>::is_zero(c_[k])) continue;
            std::string cs = FT<K>::str(c_[k]);
            bool needs_paren = cs.find('+') != std::string::npos ||
                               cs.find('-') != std::string::npos ||
                               cs.find('/') != std::string::npos;
            if (!s.empty()) {
                if (!needs_paren && cs[0] == '-') {
                    s += " - ";
                    cs = cs.substr(1);
                } else {
                    s += " + ";
                }
            }
            if (k == 0) {
                s += needs_paren ? "(" + cs + ")" : cs;
                continue;
            }
            if (cs == "1")
                ;  // bare power
            else if (cs == "-1" && !needs_paren)
                s += "-";
            else
                s += (needs_paren ? "(" + cs + ")" : cs) + "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && FT<K>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    static_assert(FT<K>::exact, "gcd needs an exact domain");
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

// Yun's squarefree decomposition: p = prod parts[k].first^(parts[k].second)
// with each part squarefree, monic and pairwise coprime. Characteristic 0.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& p) {
    std::vector<std::pair<Poly<K>, int>> out;
    Poly<K> f = p.monic();
    if (f.degree() < 1) return out;
    Poly<K> fp = f.derivative();
    Poly<K> a = poly_gcd(f, fp);
    Poly<K> b = f / a;
    Poly<K> c = fp / a;
    int k = 1;
    while (b.degree() >= 1) {
        Poly<K> d = c - b.derivative();
        Poly<K> g = poly_gcd(b, d);
        if (g.degree() >= 1) out.push_back({g, k});
        b = b / g;
        c = d / g;
        ++k;
    }
    return out;
}

template <class K>
bool is_squarefree(const Poly<K>& p) {
    return poly_gcd(p, p.derivative()).degree() == 0;
}

// Power p^e by repeated squaring.
template <class K>
Poly<K> poly_pow(Poly<K> p, int e) {
    Poly<K> r = Poly<K>::constant(FT<K>::one());
    while (e > 0) {
        if (e & 1) r = r * p;
        p = p * p;
        e >>= 1;
    }
    return r;
}

// Parses "x^2 + 1", "2*x - 3/2", "(1+2i)*x", "x^3" style strings.
template <class K>
Poly<K> parse_poly(const std::string& src, const std::string& var = "x") {
    Poly<K> out;
    size_t i = 0;
    auto skip = [&] {
        while (i < src.size() && src[i] == ' ') ++i;
    };
    bool first = true;
    while (true) {
        skip();
        if (i >= src.size()) break;
        int sign = 1;
        if (src[i] == '+' || src[i] == '-') {
            if (src[i] == '-') sign = -1;
            ++i;
            skip();
        } else if (!first) {
            fail("parse-error", "expected '+' or '-' in polynomial '" + src + "'");
        }
        first = false;
        K coeff = FT<K>::one();
        bool have_coeff = false;
        if (i < src.size() && src[i] == '(') {
            size_t close = src.find(')', i);
            if (close == std::string::npos) fail("parse-error", "unbalanced paren");
            coeff = FT<K>::parse(src.substr(i + 1, close - i - 1));
            have_coeff = true;
            i = close + 1;
        } else if (i < src.size() && src.compare(i, var.size(), var) != 0) {
            size_t j = i;
            while (j < src.size() && src[j] != '+' && src[j] != '-' && src[j] != '*' &&
                   src[j] != ' ')
                ++j;
            coeff = FT<K>::parse(src.substr(i, j - i));
            have_coeff = true;
            i = j;
        }
        skip();
        if (i < src.size() && src[i] == '*') {
            ++i;
            skip();
        }
        int deg = 0;
        if (i < src.size() && src.compare(i, var.size(), var) == 0) {
            i += var.size();
            deg = 1;
            if (i < src.size() && src[i] == '^') {
                ++i;
                size_t j = i;
                while (j < src.size() && isdigit((unsigned char)src[j])) ++j;
                if (j == i) fail("parse-error", "missing exponent");
                deg = std::atoi(src.substr(i, j - i).c_str());
                i = j;
            }
        } else if (!have_coeff) {
            fail("parse-error", "bad term in polynomial '" + src + "'");
        }
        if (sign < 0) coeff = -coeff;
        out += Poly<K>::monomial(deg, coeff);
    }
    return out;
}

}  // namespace qmx
