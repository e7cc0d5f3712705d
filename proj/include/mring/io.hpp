#ifndef MRING_IO_HPP
#define MRING_IO_HPP

#include <string>

#include "mring/cyclic_flats.hpp"
#include "mring/matroid.hpp"

namespace mring {

// One matroid per line: {"format":"matroid/v1","n":...,"bases":[[...],...]}
// or the "cyclic_flats" variant with {"set":[...],"rank":...} records.
// Exactly one of the two keys may be present; elements are 1-based.
Matroid parse_matroid(const std::string& line);

// Canonical serialization: the bases variant, sets ascending, bases sorted.
std::string serialize_matroid(const Matroid& m);

// The compressed encoding: cyclic flats with their ranks.
std::string serialize_matroid_cyclic(const Matroid& m);

}  // namespace mring

#endif
