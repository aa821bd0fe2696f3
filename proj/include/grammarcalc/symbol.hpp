#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "grammarcalc/errors.hpp"

namespace grammarcalc {

inline bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

namespace detail {

// Process-wide, append-only name table. Ids are dense and never reused.
class SymbolTable {
 public:
  static SymbolTable& instance() {
    static SymbolTable table;
    return table;
  }

  std::uint32_t intern(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = ids_.try_emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return it->second;
  }

  const std::string& name(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    return names_[id];  // deque references survive push_back
  }

 private:
  mutable std::shared_mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

}  // namespace detail

/// An interned variable name. Comparison operators use the intern id, which is
/// an arbitrary but stable order; use `AlphabeticalOrder` for display.
class Symbol {
 public:
  explicit Symbol(std::string_view name) {
    if (!is_identifier(name)) throw DomainError("invalid symbol name '" + std::string(name) + "'");
    id_ = detail::SymbolTable::instance().intern(name);
  }

  std::uint32_t id() const noexcept { return id_; }
  const std::string& name() const { return detail::SymbolTable::instance().name(id_); }

  friend bool operator==(Symbol, Symbol) = default;
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

 private:
  std::uint32_t id_;
};

struct AlphabeticalOrder {
  bool operator()(Symbol a, Symbol b) const { return a.name() < b.name(); }
};

}  // namespace grammarcalc
