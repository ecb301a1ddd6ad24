#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace cli {

// all numeric output goes through one format: 12 significant digits
inline std::string num(double v) {
    if (v == 0.0)
        v = 0.0; // drop the sign of negative zero
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

// insertion-ordered JSON object writer, nothing more
class Json {
  public:
    Json& add(const std::string& key, double value) { return raw(key, num(value)); }
    Json& add(const std::string& key, int value) { return raw(key, std::to_string(value)); }
    Json& add(const std::string& key, bool value) { return raw(key, value ? "true" : "false"); }
    Json& add(const std::string& key, const std::string& value) { return raw(key, quote(value)); }
    Json& add(const std::string& key, const char* value) { return raw(key, quote(value)); }
    Json& add(const std::string& key, const Json& nested) { return raw(key, nested.str()); }
    Json& add_null(const std::string& key) { return raw(key, "null"); }

    template <typename T> Json& add_array(const std::string& key, const std::vector<T>& items) {
        std::string body = "[";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i)
                body += ",";
            if constexpr (std::is_same_v<T, Json>)
                body += items[i].str();
            else if constexpr (std::is_same_v<T, std::string>)
                body += quote(items[i]);
            else
                body += num(static_cast<double>(items[i]));
        }
        body += "]";
        return raw(key, body);
    }

    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < fields_.size(); ++i) {
            if (i)
                out += ",";
            out += quote(fields_[i].first) + ":" + fields_[i].second;
        }
        out += "}";
        return out;
    }

  private:
    Json& raw(const std::string& key, const std::string& value) {
        fields_.emplace_back(key, value);
        return *this;
    }
    std::vector<std::pair<std::string, std::string>> fields_;
};

class Csv {
  public:
    explicit Csv(std::vector<std::string> header) : header_(std::move(header)) {}

    void row(const std::vector<std::string>& cells) { rows_.push_back(cells); }

    void write(std::ostream& out) const {
        for (std::size_t i = 0; i < header_.size(); ++i)
            out << (i ? "," : "") << header_[i];
        out << "\n";
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i)
                out << (i ? "," : "") << r[i];
            out << "\n";
        }
    }

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// destination stream: --out path or stdout
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void finish() {
        if (file_) {
            file_->flush();
            if (!*file_)
                throw std::runtime_error("write failure on output file");
        } else {
            std::cout.flush();
        }
    }

  private:
    std::unique_ptr<std::ofstream> file_;
};

} // namespace cli
