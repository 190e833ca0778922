#include <string>

#include "iflin/scalar.hpp"

namespace iflin {

IfScalar parse_scalar(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos ||
      text.find(',', comma + 1) != std::string_view::npos) {
    throw MalformedScalar("expected 'mu,nu', got '" + std::string(text) + "'");
  }
  const Rational mu = Rational::parse(text.substr(0, comma));
  const Rational nu = Rational::parse(text.substr(comma + 1));
  return IfScalar(mu, nu);
}

std::string format_scalar(const IfScalar& a) {
  return a.mu().to_string() + "," + a.nu().to_string();
}

}  // namespace iflin
