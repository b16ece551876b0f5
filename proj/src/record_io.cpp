#include "gfsort/record_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

namespace gfsort {

std::string render_key(Key x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Key parse_key_line(const std::string& line, std::size_t line_no) {
    std::string_view body = trim(line);
    if (body.empty()) throw ParseError(line_no, "blank record line");
    if (body.front() == '+') body.remove_prefix(1); // from_chars rejects it
    Key value = 0.0;
    const auto res = std::from_chars(body.data(), body.data() + body.size(), value);
    if (res.ec != std::errc{} || res.ptr != body.data() + body.size())
        throw ParseError(line_no, "not a decimal floating-point literal");
    if (!std::isfinite(value)) throw NonFiniteKey(line_no, "line");
    return value;
}

RecordFile read_records(std::istream& in) {
    RecordFile file;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string_view body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '#') {
            std::string_view text = body.substr(1);
            if (!text.empty() && text.front() == ' ') text.remove_prefix(1);
            file.comments.emplace_back(text);
            continue;
        }
        file.keys.push_back(parse_key_line(line, line_no));
    }
    return file;
}

RecordFile read_record_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open for reading");
    return read_records(in);
}

void write_records(std::ostream& out, std::span<const Key> keys,
                   std::span<const std::string> comments) {
    for (const auto& comment : comments) out << "# " << comment << '\n';
    for (const Key x : keys) out << render_key(x) << '\n';
}

void write_record_file(const std::string& path, std::span<const Key> keys,
                       std::span<const std::string> comments) {
    std::ofstream out(path);
    if (!out) throw IoError(path, "cannot open for writing");
    write_records(out, keys, comments);
    out.flush();
    if (!out) throw IoError(path, "write failed");
}

} // namespace gfsort
