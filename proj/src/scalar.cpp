#include "lywb/scalar.hpp"

#include <cctype>
#include <ostream>

#include "lywb/error.hpp"

namespace lywb {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool valid_integer(std::string_view s) {
    size_t p = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (p == s.size()) return false;
    for (; p < s.size(); ++p)
        if (!std::isdigit(static_cast<unsigned char>(s[p]))) return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s = trim(text);
    auto slash = s.find('/');
    std::string n = s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(n) || !valid_integer(d) || d[0] == '-' || d[0] == '+')
        throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
    if (n[0] == '+') n.erase(0, 1);
    mpz_class den(d);
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
    mpq_class q(mpz_class(n), den);
    return Rational(q);
}

Rational Rational::inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by 0");
    v_ /= o.v_;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Gaussian Gaussian::inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
    Rational n = re_ * re_ + im_ * im_;
    return Gaussian(re_ / n, -im_ / n);
}

std::string Gaussian::str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.str();
    if (im_.sign() < 0)
        s += "-" + (-im_).str();
    else
        s += "+" + im_.str();
    return s + "*i";
}

// Accepts "a", "a+b*i", "a-b*i", "b*i", "i", "-i", "a+i".
Gaussian Gaussian::parse(std::string_view text) {
    std::string s = trim(text);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty scalar");
    if (s.back() != 'i') return Gaussian(Rational::parse(s));

    std::string body = s.substr(0, s.size() - 1);
    if (!body.empty() && body.back() == '*') body.pop_back();
    // Split at the last sign that is not the leading character.
    size_t split = std::string::npos;
    for (size_t p = body.size(); p-- > 1;)
        if (body[p] == '+' || body[p] == '-') { split = p; break; }
    std::string re = split == std::string::npos ? "0" : body.substr(0, split);
    std::string im = split == std::string::npos ? body : body.substr(split);
    if (im.empty() || im == "+") im = "1";
    else if (im == "-") im = "-1";
    return Gaussian(Rational::parse(re), Rational::parse(im));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }
std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << z.str(); }

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::Degenerate: return "Degenerate";
        case ErrorKind::FieldError: return "FieldError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotSkew: return "NotSkew";
        case ErrorKind::NotLie: return "NotLie";
        case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
        case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
        case ErrorKind::InvalidPreLy: return "InvalidPreLy";
        case ErrorKind::NotInvolution: return "NotInvolution";
        case ErrorKind::NotProduct: return "NotProduct";
        case ErrorKind::NotComplexStructure: return "NotComplexStructure";
        case ErrorKind::NotPerfect: return "NotPerfect";
        case ErrorKind::NotIso: return "NotIso";
        case ErrorKind::NotInvariant: return "NotInvariant";
        case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorKind::NotSymplectic: return "NotSymplectic";
        case ErrorKind::NotComplementary: return "NotComplementary";
        case ErrorKind::NotIsotropic: return "NotIsotropic";
        case ErrorKind::NotSubalgebra: return "NotSubalgebra";
        case ErrorKind::NotKahlerPair: return "NotKahlerPair";
        case ErrorKind::NotParaKahler: return "NotParaKahler";
        case ErrorKind::NotPseudoKahler: return "NotPseudoKahler";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::ZeroParameter: return "ZeroParameter";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::MissingObject: return "MissingObject";
        case ErrorKind::Internal: return "Internal";
    }
    return "Error";
}

}  // namespace lywb
