#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "enssum/errors.hpp"
#include "enssum/oracle.hpp"

namespace enssum {

// Text table: one decimal value per line, '#' starts a comment, blank lines
// are skipped.
inline std::vector<double> parse_table_text(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(first, last - first + 1);
        char* end = nullptr;
        const double v = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size())
            throw ValidationError("line " + std::to_string(line_no) +
                                  " is not a decimal value: '" + token + "'");
        values.push_back(v);
    }
    return values;
}

// Structured table: a file containing a single JSON array of numbers.
inline std::vector<double> parse_table_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("invalid JSON table: ") + e.what());
    }
    if (!doc.is_array()) throw ValidationError("JSON table must be a single array of numbers");
    std::vector<double> values;
    values.reserve(doc.size());
    for (std::size_t idx = 0; idx < doc.size(); ++idx) {
        if (!doc[idx].is_number())
            throw ValidationError("JSON table entry " + std::to_string(idx + 1) +
                                  " is not a number");
        values.push_back(doc[idx].get<double>());
    }
    return values;
}

// Load a value table from disk, dispatching on the .json extension.
inline std::vector<double> load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file '" + path + "'");
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return json ? parse_table_json(in) : parse_table_text(in);
}

inline SampledFunction load_function_file(const std::string& path) {
    return SampledFunction::from_table(load_table_file(path));
}

}  // namespace enssum
