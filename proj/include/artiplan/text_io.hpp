#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace artiplan {

// All on-disk formats in this project are line-oriented text documents:
// whitespace-separated tokens, '#' starts a comment, doubles written with
// enough digits to round-trip exactly. A shared reader/writer keeps parsing
// errors uniform ("file:line: message") and output bytes deterministic.

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class TokenReader {
public:
    TokenReader(std::string text, std::string source_name);

    // Reads the whole file and tokenizes it up front.
    static TokenReader from_file(const std::string& path);

    bool at_end() const { return pos_ >= tokens_.size(); }
    const std::string& peek() const;
    std::string take();
    // Fails (with file:line context) unless the next token equals `expected`.
    void expect(std::string_view expected);
    bool accept(std::string_view token);

    double take_double();
    std::int64_t take_int();
    std::string take_word() { return take(); }

    [[noreturn]] void fail(const std::string& message) const;

private:
    struct Token {
        std::string text;
        int line;
    };
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::string source_;
};

// Formats a double so that strtod() recovers the identical bits (%.17g).
std::string format_double(double v);

class TextWriter {
public:
    TextWriter& word(std::string_view w);
    TextWriter& num(double v);
    TextWriter& num(std::int64_t v);
    TextWriter& num(int v) { return num(static_cast<std::int64_t>(v)); }
    TextWriter& num(std::size_t v) { return num(static_cast<std::int64_t>(v)); }
    TextWriter& end_line();

    const std::string& str() const { return out_; }
    std::string take_str() { return std::move(out_); }

private:
    std::string out_;
    bool line_open_ = false;
};

// Writes via a temp file in the same directory followed by rename, so
// readers never observe partial documents.
void atomic_write_file(const std::string& path, std::string_view contents);

std::string read_file(const std::string& path);

}  // namespace artiplan
