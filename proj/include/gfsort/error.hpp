#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfsort {

// Base class for every error this library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A non-empty record sequence was required.
class EmptyInput : public Error {
public:
    EmptyInput() : Error("input contains no records") {}
};

// A key was NaN or an infinity. `index` identifies the first offending
// record (0-based), or the line number when raised by the file reader.
class NonFiniteKey : public Error {
public:
    NonFiniteKey(std::size_t index, const std::string& what_prefix = "record")
        : Error(what_prefix + " " + std::to_string(index) + ": key is not finite"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// A key fell outside the mapper's [x_min, x_max] domain.
class OutOfRange : public Error {
public:
    OutOfRange(double value, double lo, double hi)
        : Error("key " + std::to_string(value) + " outside mapping domain [" +
                std::to_string(lo) + ", " + std::to_string(hi) + "]") {}
};

// The mapper has no usable slope (all keys equal, sigma = 0, or N = 1);
// callers route every record to box 1 instead of evaluating the map.
class DegenerateMapper : public Error {
public:
    DegenerateMapper() : Error("mapper is degenerate; route all records to box 1") {}
};

// A local tangent or refined position was requested for a box no record
// maps into.
class EmptyBox : public Error {
public:
    explicit EmptyBox(std::size_t box)
        : Error("box " + std::to_string(box) + " is empty"), box_(box) {}
    std::size_t box() const noexcept { return box_; }

private:
    std::size_t box_;
};

// A generation or bench spec failed validation; `field` names the bad field.
class InvalidSpec : public Error {
public:
    InvalidSpec(const std::string& field, const std::string& why)
        : Error("invalid spec field '" + field + "': " + why), field_(field) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// A text input (record file or CSV) failed to parse; `line` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& why)
        : Error("line " + std::to_string(line) + ": " + why), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// An I/O failure; `path` is the file involved.
class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& why)
        : Error(path + ": " + why), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace gfsort
