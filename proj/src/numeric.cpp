#include "torifan/numeric.hpp"

#include <cctype>

namespace torifan {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(errc::invalid_argument, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int to_integer(const Rat& q) {
  if (!is_integer(q)) fail(errc::invalid_argument, "not an integer: " + str(q));
  return q.get_num();
}

Int floor_int(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int ceil_int(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

std::string str(const Int& z) { return z.get_str(); }

std::string str(const Rat& q) { return q.get_str(); }

Rat parse_rat(const std::string& s) {
  // Strict shape check first: mpq_set_str tolerates garbage we do not want.
  auto is_int_token = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int_token(s)) fail(errc::parse_error, "bad rational '" + s + "'");
    return Rat(Int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!is_int_token(num) || !is_int_token(den))
    fail(errc::parse_error, "bad rational '" + s + "'");
  Int d(den);
  if (d == 0) fail(errc::parse_error, "zero denominator in '" + s + "'");
  return make_rat(Int(num), d);
}

}  // namespace torifan
