#include "artiplan/text_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace artiplan {

TokenReader::TokenReader(std::string text, std::string source_name) : source_(std::move(source_name)) {
    int line = 1;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == '#') {
            while (i < n && text[i] != '\n') ++i;
        } else {
            const std::size_t start = i;
            while (i < n && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' && text[i] != '\n' &&
                   text[i] != '#')
                ++i;
            tokens_.push_back({text.substr(start, i - start), line});
        }
    }
}

TokenReader TokenReader::from_file(const std::string& path) {
    return TokenReader(read_file(path), path);
}

const std::string& TokenReader::peek() const {
    if (at_end()) fail("unexpected end of document");
    return tokens_[pos_].text;
}

std::string TokenReader::take() {
    if (at_end()) fail("unexpected end of document");
    return tokens_[pos_++].text;
}

void TokenReader::expect(std::string_view expected) {
    const std::string got = take();
    if (got != expected) {
        --pos_;
        fail("expected '" + std::string(expected) + "', got '" + got + "'");
    }
}

bool TokenReader::accept(std::string_view token) {
    if (!at_end() && tokens_[pos_].text == token) {
        ++pos_;
        return true;
    }
    return false;
}

double TokenReader::take_double() {
    const std::string t = take();
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || errno == ERANGE) {
        --pos_;
        fail("expected a number, got '" + t + "'");
    }
    return v;
}

std::int64_t TokenReader::take_int() {
    const std::string t = take();
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size() || errno == ERANGE) {
        --pos_;
        fail("expected an integer, got '" + t + "'");
    }
    return v;
}

void TokenReader::fail(const std::string& message) const {
    const int line = pos_ < tokens_.size() ? tokens_[pos_].line
                     : tokens_.empty()    ? 1
                                          : tokens_.back().line;
    throw ParseError(source_ + ":" + std::to_string(line) + ": " + message);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

TextWriter& TextWriter::word(std::string_view w) {
    if (line_open_) out_ += ' ';
    out_.append(w);
    line_open_ = true;
    return *this;
}

TextWriter& TextWriter::num(double v) { return word(format_double(v)); }

TextWriter& TextWriter::num(std::int64_t v) { return word(std::to_string(v)); }

TextWriter& TextWriter::end_line() {
    out_ += '\n';
    line_open_ = false;
    return *this;
}

void atomic_write_file(const std::string& path, std::string_view contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for write: " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace artiplan
