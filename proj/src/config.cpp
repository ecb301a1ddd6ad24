#include "cuspcollide/config.hpp"

#include <fstream>
#include <stdexcept>

namespace cuspcollide {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

} // namespace

std::map<std::string, std::string> read_key_value_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    std::map<std::string, std::string> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty key");
        values[key] = value;
    }
    return values;
}

SolidProfile profile_from_file(const std::string& path, SolidProfile base) {
    const auto values = read_key_value_file(path);
    auto assign = [&](const char* key, double& target) {
        const auto it = values.find(key);
        if (it == values.end())
            return;
        try {
            std::size_t consumed = 0;
            target = std::stod(it->second, &consumed);
            if (consumed != it->second.size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw std::runtime_error(path + ": bad numeric value for key '" + std::string(key) +
                                     "': " + it->second);
        }
    };
    assign("alpha", base.alpha);
    assign("h", base.h);
    assign("r0", base.r0);
    assign("d0", base.d0);
    base.validate();
    return base;
}

} // namespace cuspcollide
