#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibercheck {

/// Ordered list of distinct variable names. List position defines precedence
/// for monomial orders: the first name is the largest variable. The name "s"
/// is reserved for the field radical and rejected.
class VariableSet {
public:
    VariableSet() = default;

    explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            validate(names_[i]);
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("VariableSet: duplicate variable '" + names_[i] + "'");
        }
    }

    /// Parses a comma list: "x,y,z".
    static VariableSet parse(const std::string& text) {
        std::vector<std::string> names;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.erase(item.begin());
            while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.pop_back();
            if (!item.empty()) names.push_back(item);
        }
        return VariableSet(std::move(names));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    bool contains(const std::string& name) const { return index_of(name).has_value(); }

    /// Concatenation; throws on a name clash.
    VariableSet joined_with(const VariableSet& other) const {
        std::vector<std::string> names = names_;
        for (const auto& n : other.names_) {
            if (contains(n)) throw std::invalid_argument("VariableSet: name clash on '" + n + "'");
            names.push_back(n);
        }
        return VariableSet(std::move(names));
    }

    /// Fresh name not present in the set: base, base1, base2, ...
    std::string fresh_name(const std::string& base) const {
        if (!contains(base) && base != "s") return base;
        for (int k = 1;; ++k) {
            std::string candidate = base + std::to_string(k);
            if (!contains(candidate)) return candidate;
        }
    }

    friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.names_ == b.names_; }
    friend bool operator!=(const VariableSet& a, const VariableSet& b) { return !(a == b); }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (i) out += ",";
            out += names_[i];
        }
        return out;
    }

private:
    static void validate(const std::string& name) {
        if (name.empty()) throw std::invalid_argument("VariableSet: empty variable name");
        if (name == "s") throw std::invalid_argument("VariableSet: 's' is reserved for the field radical");
        if (!std::isalpha(static_cast<unsigned char>(name[0])))
            throw std::invalid_argument("VariableSet: bad variable name '" + name + "'");
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw std::invalid_argument("VariableSet: bad variable name '" + name + "'");
    }

    std::vector<std::string> names_;
};

}  // namespace fibercheck
