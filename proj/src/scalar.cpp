#include "stromver/scalar.hpp"

#include <cctype>

namespace stromver {

namespace {

std::string rat_str(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) {
    s += "/" + q.get_den().get_str();
  }
  return s;
}

// Consumes a signed rational starting at pos. An empty mantissa directly
// before 'i' (as in "+i") parses as +/-1; `allow_empty` enables that.
Rational parse_rat(const std::string& s, size_t& pos, bool allow_empty) {
  size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  size_t digits_begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits_begin) {
    if (allow_empty && pos < s.size() && s[pos] == 'i') {
      return neg ? Rational(-1) : Rational(1);
    }
    throw ParseError("expected digits at offset " + std::to_string(start) +
                     " in '" + s + "'");
  }
  std::string num = s.substr(digits_begin, pos - digits_begin);
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t den_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_begin) throw ParseError("expected denominator in '" + s + "'");
    den = s.substr(den_begin, pos - den_begin);
    if (den == "0") throw ParseError("zero denominator in '" + s + "'");
  }
  Rational q((neg ? "-" : "") + num + "/" + den);
  q.canonicalize();
  return q;
}

}  // namespace

std::string GaussRational::str() const {
  if (im_ == 0) return rat_str(re_);
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = rat_str(im_) + "i";
  if (re_ == 0) return imag;
  if (im_ > 0) return rat_str(re_) + "+" + imag;
  return rat_str(re_) + imag;  // sign carried by the numerator
}

GaussRational GaussRational::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty scalar");
  size_t pos = 0;
  Rational first = parse_rat(s, pos, /*allow_empty=*/true);
  if (pos < s.size() && s[pos] == 'i') {
    ++pos;
    if (pos != s.size()) throw ParseError("trailing characters in '" + s + "'");
    return {Rational(0), first};
  }
  if (pos == s.size()) return {first, Rational(0)};
  Rational second = parse_rat(s, pos, /*allow_empty=*/true);
  if (pos >= s.size() || s[pos] != 'i') {
    throw ParseError("expected 'i' in '" + s + "'");
  }
  ++pos;
  if (pos != s.size()) throw ParseError("trailing characters in '" + s + "'");
  return {first, second};
}

}  // namespace stromver
