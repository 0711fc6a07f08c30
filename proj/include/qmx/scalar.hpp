#pragma once

// Scalar domains: exact rationals Q (GMP), Gaussian rationals Q(i), and
// complex floats, each with an involution (identity or conjugation).

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace qmx {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw Error(code, msg);
}

enum class Involution { Identity, Conjugation };
enum class DomainKind { Rational, GaussianRational, ComplexFloat };

struct Domain {
    DomainKind kind = DomainKind::Rational;
    Involution invol = Involution::Identity;
    double tol = 1e-9;

    void validate() const {
        if (kind == DomainKind::Rational && invol == Involution::Conjugation)
            fail("unsupported-domain", "rational domain admits only the identity involution");
        if (tol < 0) fail("invalid-argument", "tolerance must be nonnegative");
    }
};

using Rat = mpq_class;
using Cplx = std::complex<double>;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat parse_rat(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    try {
        Rat r(t);
        if (r.get_den() == 0) fail("parse-error", "zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail("parse-error", "bad rational '" + s + "'");
    }
}

// ---------------------------------------------------------------------------
// Gaussian rationals

struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long n) : re(n), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {Rat(a.re + b.re), Rat(a.im + b.im)};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {Rat(a.re - b.re), Rat(a.im - b.im)};
    }
    friend GaussRat operator-(const GaussRat& a) { return {Rat(-a.re), Rat(-a.im)}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {Rat(a.re * b.re - a.im * b.im), Rat(a.re * b.im + a.im * b.re)};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n(b.re * b.re + b.im * b.im);
        if (n == 0) fail("invalid-argument", "division by zero in Q(i)");
        return {Rat((a.re * b.re + a.im * b.im) / n), Rat((a.im * b.re - a.re * b.im) / n)};
    }
    GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
    GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
    GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
    GaussRat& operator/=(const GaussRat& b) { return *this = *this / b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    GaussRat conj() const { return {re, Rat(-im)}; }
    Rat norm() const { return Rat(re * re + im * im); }  // |z|^2
    bool is_zero() const { return re == 0 && im == 0; }
};

inline std::string gauss_str(const GaussRat& z) {
    if (z.im == 0) return rat_str(z.re);
    std::string ip;
    Rat ai(abs(z.im));
    if (ai == 1)
        ip = "i";
    else
        ip = rat_str(ai) + "i";
    if (z.re == 0) return (z.im < 0 ? "-" : "") + ip;
    return rat_str(z.re) + (z.im < 0 ? "-" : "+") + ip;
}

// Splits "a+bi" style strings at the sign that separates real and imaginary
// parts. Returns npos when there is no non-leading sign.
inline size_t split_sign_pos(const std::string& s) {
    size_t pos = std::string::npos;
    for (size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E' &&
            s[k - 1] != '/')
            pos = k;
    }
    return pos;
}

inline GaussRat parse_gauss(const std::string& s) {
    if (s.empty()) fail("parse-error", "empty scalar");
    if (s.back() != 'i') return GaussRat(parse_rat(s));
    std::string body = s.substr(0, s.size() - 1);
    size_t pos = split_sign_pos(body);
    std::string res, ims;
    if (pos == std::string::npos) {
        res = "0";
        ims = body;
    } else {
        res = body.substr(0, pos);
        ims = body.substr(pos);  // keeps the sign
    }
    if (ims.empty() || ims == "+") ims = "1";
    if (ims == "-") ims = "-1";
    return {parse_rat(res), parse_rat(ims)};
}

// ---------------------------------------------------------------------------
// Complex floats

inline std::string dbl_str(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string cplx_str(const Cplx& z) {
    if (z.imag() == 0) return dbl_str(z.real());
    std::string ip = dbl_str(std::abs(z.imag())) + "i";
    if (z.real() == 0) return (z.imag() < 0 ? "-" : "") + ip;
    return dbl_str(z.real()) + (z.imag() < 0 ? "-" : "+") + ip;
}

inline double parse_dbl(const std::string& s) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) fail("parse-error", "bad number '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        fail("parse-error", "bad number '" + s + "'");
    } catch (const std::out_of_range&) {
        fail("parse-error", "number out of range '" + s + "'");
    }
}

inline Cplx parse_cplx(const std::string& s) {
    if (s.empty()) fail("parse-error", "empty scalar");
    if (s.back() != 'i') return Cplx(parse_dbl(s), 0.0);
    std::string body = s.substr(0, s.size() - 1);
    size_t pos = split_sign_pos(body);
    std::string res, ims;
    if (pos == std::string::npos) {
        res = "0";
        ims = body;
    } else {
        res = body.substr(0, pos);
        ims = body.substr(pos);
    }
    if (ims.empty() || ims == "+") ims = "1";
    if (ims == "-") ims = "-1";
    return {res.empty() ? 0.0 : parse_dbl(res), parse_dbl(ims)};
}

// ---------------------------------------------------------------------------
// Field traits

template <class K>
struct FT;

template <>
struct FT<Rat> {
    static constexpr bool exact = true;
    static constexpr bool has_imaginary = false;
    static constexpr DomainKind kind = DomainKind::Rational;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return a == 0; }
    static Rat conj(const Rat& a) { return a; }
    static Rat from_int(long n) { return Rat(n); }
    static Rat from_rat(const Rat& r) { return r; }
    static std::string str(const Rat& a) { return rat_str(a); }
    static Rat parse(const std::string& s) { return parse_rat(s); }
    static Rat imaginary() {
        fail("unsupported-domain", "no imaginary unit in Q");
    }
};

template <>
struct FT<GaussRat> {
    static constexpr bool exact = true;
    static constexpr bool has_imaginary = true;
    static constexpr DomainKind kind = DomainKind::GaussianRational;
    static GaussRat zero() { return GaussRat(); }
    static GaussRat one() { return GaussRat(1); }
    static bool is_zero(const GaussRat& a) { return a.is_zero(); }
    static GaussRat conj(const GaussRat& a) { return a.conj(); }
    static GaussRat from_int(long n) { return GaussRat(n); }
    static GaussRat from_rat(const Rat& r) { return GaussRat(r); }
    static std::string str(const GaussRat& a) { return gauss_str(a); }
    static GaussRat parse(const std::string& s) { return parse_gauss(s); }
    static GaussRat imaginary() { return {Rat(0), Rat(1)}; }
};

template <>
struct FT<Cplx> {
    static constexpr bool exact = false;
    static constexpr bool has_imaginary = true;
    static constexpr DomainKind kind = DomainKind::ComplexFloat;
    static Cplx zero() { return {0.0, 0.0}; }
    static Cplx one() { return {1.0, 0.0}; }
    static bool is_zero(const Cplx& a) { return a.real() == 0 && a.imag() == 0; }
    static Cplx conj(const Cplx& a) { return std::conj(a); }
    static Cplx from_int(long n) { return {double(n), 0.0}; }
    static Cplx from_rat(const Rat& r) { return {r.get_d(), 0.0}; }
    static std::string str(const Cplx& a) { return cplx_str(a); }
    static Cplx parse(const std::string& s) { return parse_cplx(s); }
    static Cplx imaginary() { return {0.0, 1.0}; }
};

template <class K>
inline K involve(const K& a, Involution invol) {
    return invol == Involution::Conjugation ? FT<K>::conj(a) : a;
}

inline Cplx to_cplx(const Rat& r) { return {r.get_d(), 0.0}; }
inline Cplx to_cplx(const GaussRat& z) { return {z.re.get_d(), z.im.get_d()}; }
inline Cplx to_cplx(const Cplx& z) { return z; }

// Deterministic total order used for sorting canonical output.
inline int cmp_scalar(const Rat& a, const Rat& b) { return cmp(a, b); }
inline int cmp_scalar(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re, b.re);
    return c ? c : cmp(a.im, b.im);
}
inline int cmp_scalar(const Cplx& a, const Cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real() ? -1 : 1;
    if (a.imag() != b.imag()) return a.imag() < b.imag() ? -1 : 1;
    return 0;
}

}  // namespace qmx
