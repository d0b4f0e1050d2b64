#include "rigidity/rational.hpp"

namespace rigidity {

Rat parse_rational(const std::string& text) {
    if (text.empty()) fail(Err::InvalidInput, "empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            fail(Err::InvalidInput, "bad rational literal: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        fail(Err::InvalidInput, "bad rational literal: " + text);
    if (q.get_den() == 0)
        fail(Err::InvalidInput, "zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rat& value) {
    return value.get_str();
}

} // namespace rigidity
