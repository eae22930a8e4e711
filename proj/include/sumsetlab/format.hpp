#pragma once

// Wire-format literals shared by the CLI and the file formats.
//
//   subset  : hex bitmap "0x3f" (little-endian, bit i = element i) or an
//             explicit index list "[0,3,5]"
//   vector  : integer index, or a bitstring "b101" read coordinate 0
//             first (so "b101" has coordinates x0=1, x1=0, x2=1)
//   group   : "f2:5" (F_2^5), "z:64" (Z_64), or a comma list of moduli
//             "4,9" (Z_4 x Z_9)

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumsetlab/bitmap.hpp"
#include "sumsetlab/gf2.hpp"
#include "sumsetlab/group.hpp"

namespace sumsetlab {

inline Bitmap parse_subset_literal(const std::string& text, std::uint64_t universe) {
    Bitmap out(universe);
    if (text.empty()) throw std::invalid_argument("subset literal: empty string");
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        const std::string digits = text.substr(2);
        for (std::size_t k = 0; k < digits.size(); ++k) {
            const char c = digits[digits.size() - 1 - k];
            int v;
            if (c >= '0' && c <= '9')
                v = c - '0';
            else if (c >= 'a' && c <= 'f')
                v = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                v = c - 'A' + 10;
            else
                throw std::invalid_argument("subset literal: bad hex digit");
            for (int b = 0; b < 4; ++b)
                if (v >> b & 1) {
                    const std::uint64_t idx = 4 * k + b;
                    if (idx >= universe)
                        throw std::invalid_argument("subset literal: element " + std::to_string(idx) +
                                                    " outside the universe");
                    out.set(idx);
                }
        }
        return out;
    }
    if (text.front() == '[') {
        if (text.back() != ']') throw std::invalid_argument("subset literal: unterminated index list");
        std::uint64_t value = 0;
        bool in_number = false;
        for (std::size_t i = 1; i < text.size(); ++i) {
            const char c = text[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                value = value * 10 + static_cast<std::uint64_t>(c - '0');
                in_number = true;
            } else if (c == ',' || c == ']' || c == ' ') {
                if (in_number) {
                    if (value >= universe)
                        throw std::invalid_argument("subset literal: element " + std::to_string(value) +
                                                    " outside the universe");
                    out.set(value);
                    value = 0;
                    in_number = false;
                }
            } else {
                throw std::invalid_argument("subset literal: unexpected character");
            }
        }
        return out;
    }
    throw std::invalid_argument("subset literal: expected \"0x..\" or \"[i,j,..]\"");
}

inline std::string format_index_list(const Bitmap& b) {
    std::string out = "[";
    bool first = true;
    b.for_each([&](std::uint64_t i) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    });
    return out + "]";
}

inline GF2Vector parse_vector_literal(const std::string& text, int n) {
    if (text.empty()) throw std::invalid_argument("vector literal: empty string");
    if (text[0] == 'b' || text[0] == 'B') {
        std::uint32_t bits = 0;
        if (text.size() - 1 != static_cast<std::size_t>(n))
            throw std::invalid_argument("vector literal: bitstring length must equal the dimension");
        for (std::size_t i = 1; i < text.size(); ++i) {
            if (text[i] == '1')
                bits |= std::uint32_t{1} << (i - 1);
            else if (text[i] != '0')
                throw std::invalid_argument("vector literal: bitstring must be 0/1");
        }
        return {n, bits};
    }
    std::size_t pos = 0;
    const unsigned long value = std::stoul(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("vector literal: trailing characters");
    return {n, static_cast<std::uint32_t>(value)};
}

inline AbelianGroup parse_group_literal(const std::string& text) {
    if (text.rfind("f2:", 0) == 0) {
        const int n = std::stoi(text.substr(3));
        return AbelianGroup::f2(n);
    }
    if (text.rfind("z:", 0) == 0) {
        const long m = std::stol(text.substr(2));
        if (m < 2) throw std::invalid_argument("group literal: modulus must be >= 2");
        return AbelianGroup::cyclic(static_cast<std::uint32_t>(m));
    }
    std::vector<std::uint32_t> moduli;
    std::uint64_t value = 0;
    bool in_number = false;
    for (const char c : text + ",") {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
            in_number = true;
        } else if (c == ',' || c == 'x' || c == ' ') {
            if (in_number) {
                moduli.push_back(static_cast<std::uint32_t>(value));
                value = 0;
                in_number = false;
            }
        } else {
            throw std::invalid_argument("group literal: expected \"f2:n\", \"z:m\" or \"m1,m2,..\"");
        }
    }
    if (moduli.empty()) throw std::invalid_argument("group literal: no moduli given");
    return AbelianGroup(std::move(moduli));
}

}  // namespace sumsetlab
