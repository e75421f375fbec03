#include "notation.hpp"

#include <sstream>

namespace rquant::cli {

namespace {

std::string basis(std::size_t k, std::size_t l) { return "e" + std::to_string(k) + "⊗e" + std::to_string(l); }

}  // namespace

std::string action_notation(const std::vector<Op2>& coeffs, const std::string& symbol) {
  std::ostringstream os;
  const std::size_t d = coeffs.front().dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      os << symbol << '(' << basis(i, j) << ") =";
      bool first = true;
      for (std::size_t n = 0; n < coeffs.size(); ++n) {
        for (std::size_t k = 0; k < d; ++k) {
          for (std::size_t l = 0; l < d; ++l) {
            const Poly& c = coeffs[n].at(i, j, k, l);
            if (c.is_zero()) continue;

            bool negative = false;
            std::string factor;
            if (c.terms().size() == 1) {
              negative = c.terms().front().coeff.sign() < 0;
              const Poly magnitude = negative ? -c : c;
              if (!(magnitude.is_constant() && magnitude.constant_value()->is_one())) factor = magnitude.str();
            } else {
              factor = "(" + c.str() + ")";
            }

            std::string piece = factor;
            if (n > 0) {
              if (!piece.empty()) piece += ' ';
              piece += n == 1 ? std::string("h") : "h^" + std::to_string(n);
            }
            if (!piece.empty()) piece += ' ';
            piece += basis(k, l);

            if (first) {
              os << ' ' << (negative ? "-" : "") << piece;
            } else {
              os << (negative ? " - " : " + ") << piece;
            }
            first = false;
          }
        }
      }
      if (first) os << " 0";
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace rquant::cli
