#include "tbound/field.hpp"

namespace tbound {

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q" || text == "QQ" || text == "0") return rationals();
  std::string digits = text;
  if (digits.rfind("F_", 0) == 0) digits = digits.substr(2);
  unsigned long long l = 0;
  try {
    std::size_t used = 0;
    l = std::stoull(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unknown field '" + text + "' (use Q or a prime l)");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("field characteristic out of range: " + text);
  }
  return prime(l);
}

}  // namespace tbound
