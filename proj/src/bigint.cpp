#include "gf2max/common.hpp"

#include <cctype>
#include <sstream>

namespace gf2max {

std::string_view trim(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

BigInt parse_bigint(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw std::invalid_argument("empty integer");

    unsigned base = 10;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        base = 16;
        text.remove_prefix(2);
    }

    BigInt value = 0;
    for (char ch : text) {
        unsigned digit;
        if (ch >= '0' && ch <= '9')
            digit = static_cast<unsigned>(ch - '0');
        else if (base == 16 && ch >= 'a' && ch <= 'f')
            digit = static_cast<unsigned>(ch - 'a' + 10);
        else if (base == 16 && ch >= 'A' && ch <= 'F')
            digit = static_cast<unsigned>(ch - 'A' + 10);
        else
            throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
        if (digit >= base)
            throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
        value = value * base + digit;
    }
    return value;
}

std::string to_decimal(const BigInt& value)
{
    return value.str();
}

std::string to_hex(const BigInt& value)
{
    std::ostringstream out;
    out << "0x" << std::hex << value;
    return out.str();
}

}  // namespace gf2max
