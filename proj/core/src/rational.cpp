#include "maxcurve/rational.hpp"

#include <cctype>

#include "maxcurve/errors.hpp"

namespace maxcurve {

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view text)
{
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num) ||
        (slash != std::string_view::npos && (!is_integer_literal(den) || den.front() == '-' ||
                                             den.front() == '+'))) {
        throw FormatError("invalid rational literal \"" + std::string(text) + "\"");
    }
    std::string num_str(num);
    if (num_str.front() == '+') {
        num_str.erase(0, 1);
    }
    Integer numerator(num_str, 10);
    Integer denominator(1);
    if (slash != std::string_view::npos) {
        denominator = Integer(std::string(den), 10);
        if (denominator == 0) {
            throw FormatError("zero denominator in \"" + std::string(text) + "\"");
        }
    }
    Rational result(numerator, denominator);
    result.canonicalize();
    return result;
}

}  // namespace maxcurve
