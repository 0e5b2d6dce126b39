/* Copyright 2026 The qwire Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QWIRE_TESTS_GOLDEN_MANIFEST_HPP
#define QWIRE_TESTS_GOLDEN_MANIFEST_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

struct Invocation {
    std::string file;
    std::vector<std::string> args;
};

/// Reads `invocations.txt`: one golden file name per line followed by its arguments.
inline std::vector<Invocation> read_manifest(const std::string& dir) {
    std::ifstream in(dir + "/invocations.txt");
    if (!in) throw std::runtime_error("missing " + dir + "/invocations.txt");
    std::vector<Invocation> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        std::istringstream tokens(line);
        Invocation inv;
        tokens >> inv.file;
        for (std::string t; tokens >> t;) inv.args.push_back(t);
        out.push_back(std::move(inv));
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace golden

#endif // QWIRE_TESTS_GOLDEN_MANIFEST_HPP
