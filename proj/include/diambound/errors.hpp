/*
Copyright 2026 The diambound Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diambound {

/// Base class for every error the library reports about its input.
class graph_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list text. line() is 1-based; 0 means the error is not tied
/// to a particular line (empty input, too many vertices).
class parse_error : public graph_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : graph_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A computation that needs a connected graph was given a disconnected one.
class not_connected : public graph_error {
public:
    not_connected() : graph_error("graph is not connected") {}
};

/// A computation expected a tree (connected, m = n - 1).
class not_a_tree : public graph_error {
public:
    explicit not_a_tree(const std::string& why) : graph_error("graph is not a tree: " + why) {}
};

/// The exact oracle refused a graph above its configured size limit.
class size_limit_exceeded : public graph_error {
public:
    size_limit_exceeded(std::size_t n, std::size_t limit)
        : graph_error("graph has " + std::to_string(n) + " vertices, above the limit of " +
                      std::to_string(limit)) {}
};

}  // namespace diambound
