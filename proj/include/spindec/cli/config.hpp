#pragma once

// `key = value` config files and named presets both end up as extra flags
// appended to argv, but only for keys the command line does not already set.

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spindec/errors.hpp"

namespace spindec::cli {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Blank lines and lines starting with '#' are skipped. Keys may be written
// with or without leading dashes.
inline KeyValues parse_config(std::istream& in, const std::string& origin = "config")
{
    KeyValues out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument(origin + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        while (!key.empty() && key[0] == '-') key.erase(0, 1);
        if (key.empty()) throw InvalidArgument(origin + ":" + std::to_string(lineno) + ": empty key");
        out.emplace_back(key, trim(t.substr(eq + 1)));
    }
    return out;
}

inline KeyValues read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read config file " + path);
    return parse_config(in, path);
}

// Long option names present on the command line ("--N 400", "--N=400").
inline std::set<std::string> given_keys(const std::vector<std::string>& args)
{
    std::set<std::string> keys;
    for (const auto& a : args) {
        if (a.size() < 3 || a.rfind("--", 0) != 0) continue;
        keys.insert(a.substr(2, a.find('=') - 2));
    }
    return keys;
}

// Value of --name in args, if any.
inline std::string find_flag(const std::vector<std::string>& args, const std::string& name)
{
    const std::string flag = "--" + name;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == flag && i + 1 < args.size()) return args[i + 1];
        if (args[i].rfind(flag + "=", 0) == 0) return args[i].substr(flag.size() + 1);
    }
    return {};
}

inline void inject_defaults(std::vector<std::string>& args, const KeyValues& defaults)
{
    const auto present = given_keys(args);
    std::set<std::string> added;
    for (const auto& [k, v] : defaults) {
        if (present.contains(k) || added.contains(k)) continue;
        args.push_back("--" + k);
        args.push_back(v);
        added.insert(k);
    }
}

} // namespace spindec::cli
