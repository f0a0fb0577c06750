#include "monowalk/rational.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "monowalk/error.hpp"

namespace monowalk {

  std::string to_string(Rational const& q) {
    return q.get_str();
  }

  std::string to_string(Integer const& z) {
    return z.get_str();
  }

  Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.pop_back();
    }
    std::size_t start = 0;
    while (start < s.size()
           && std::isspace(static_cast<unsigned char>(s[start]))) {
      ++start;
    }
    s = s.substr(start);
    if (s.empty()) {
      raise(ErrorKind::InvalidInput, "empty fraction");
    }
    std::size_t slash = s.find('/');
    auto        digits_ok = [](std::string const& part) {
      std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
      if (i == part.size()) {
        return false;
      }
      for (; i < part.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
          return false;
        }
      }
      return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+') {
      raise(ErrorKind::InvalidInput,
            "malformed fraction \"" + std::string(text) + "\"");
    }
    if (num[0] == '+') {
      num = num.substr(1);
    }
    Integer d(den);
    if (d == 0) {
      raise(ErrorKind::InvalidInput, "zero denominator in \"" + std::string(text) + "\"");
    }
    Rational q{Integer(num), d};
    q.canonicalize();
    return q;
  }

  Rational power(Rational const& base, std::uint64_t exponent) {
    Rational result = 1;
    Rational b      = base;
    while (exponent > 0) {
      if (exponent & 1) {
        result *= b;
      }
      exponent >>= 1;
      if (exponent > 0) {
        b *= b;
      }
    }
    return result;
  }

  Integer ceil(Rational const& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
  }

  double to_double(Rational const& q) {
    return q.get_d();
  }

  std::string to_decimal(Rational const& q, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << q.get_d();
    return os.str();
  }

  Integer factorial(std::uint64_t n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
  }

  Integer binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
      return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
  }

  Integer multinomial(std::vector<std::int64_t> const& parts) {
    std::uint64_t total = 0;
    for (auto p : parts) {
      if (p < 0) {
        return 0;
      }
      total += static_cast<std::uint64_t>(p);
    }
    Integer r = factorial(total);
    for (auto p : parts) {
      r /= factorial(static_cast<std::uint64_t>(p));
    }
    return r;
  }

  Rational sum(std::vector<Rational> const& values) {
    Rational s = 0;
    for (auto const& v : values) {
      s += v;
    }
    return s;
  }

}  // namespace monowalk
