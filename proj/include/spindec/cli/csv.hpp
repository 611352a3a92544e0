#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "spindec/errors.hpp"

namespace spindec::cli {

// 17 significant digits, '.' decimal separator regardless of locale.
inline std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class CsvWriter {
public:
    // "-" or empty writes to stdout.
    explicit CsvWriter(const std::string& path)
    {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::out | std::ios::trunc);
            if (!file_) throw InvalidArgument("cannot open output file " + path);
            out_ = &file_;
        }
    }

    void header(const std::vector<std::string>& names)
    {
        for (std::size_t i = 0; i < names.size(); ++i) *out_ << (i ? "," : "") << names[i];
        *out_ << '\n';
    }

    void row(const std::vector<double>& values)
    {
        for (std::size_t i = 0; i < values.size(); ++i) *out_ << (i ? "," : "") << format_number(values[i]);
        *out_ << '\n';
    }

    void flush() { out_->flush(); }

private:
    std::ofstream file_;
    std::ostream* out_ = &std::cout;
};

} // namespace spindec::cli
