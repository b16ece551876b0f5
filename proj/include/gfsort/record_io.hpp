#pragma once

// Plain-text record files: optional `#` comment lines up front (generator
// provenance lives there), then one key per line. Keys are rendered in
// shortest round-trip decimal form, so write-then-read is lossless at the
// bit level and sorted outputs can be compared byte-for-byte.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gfsort/error.hpp"
#include "gfsort/mapping.hpp"

namespace gfsort {

// Shortest decimal string that parses back to exactly x.
std::string render_key(Key x);

// Parses one record line. Leading `+` and surrounding blanks are
// tolerated; anything else non-numeric is a ParseError carrying the
// 1-based line number, and values like `nan` or `inf` are NonFiniteKey.
Key parse_key_line(const std::string& line, std::size_t line_no);

struct RecordFile {
    std::vector<std::string> comments; // header lines, `#` stripped
    std::vector<Key> keys;
};

RecordFile read_records(std::istream& in);
RecordFile read_record_file(const std::string& path);

void write_records(std::ostream& out, std::span<const Key> keys,
                   std::span<const std::string> comments = {});
void write_record_file(const std::string& path, std::span<const Key> keys,
                       std::span<const std::string> comments = {});

} // namespace gfsort
