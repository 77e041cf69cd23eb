#ifndef PERMEQ_NOTATION_HPP
#define PERMEQ_NOTATION_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "permeq/perm.hpp"

namespace permeq {

/**
 * Parses disjoint cycle notation such as "(1 2 3)(4 5)".
 *
 * Points inside a cycle are separated by whitespace or commas. "()" and "id"
 * denote the identity. The degree is supplied by the caller so that trailing
 * fixed points are representable. Throws ParseError with a one-based
 * line/column on malformed input.
 */
Perm parse_cycles(std::string_view text, std::size_t n);

/// Largest point mentioned in the text (0 for the identity). Useful as a
/// default degree when the caller did not give one.
std::size_t largest_point(std::string_view text);

/// Canonical cycle notation: each cycle starts at its least point, cycles
/// sorted by that point, fixed points omitted unless verbose. The identity
/// prints as "()".
std::string format_cycles(const Perm& p, bool verbose = false);

std::string format_cycle(const Cycle& c);

}  // namespace permeq

#endif  // PERMEQ_NOTATION_HPP
