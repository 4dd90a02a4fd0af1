#ifndef HYBRID_IDS_HPP
#define HYBRID_IDS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace hybrid {

// Name of a constant of the represented language. Nonempty, no whitespace.
class ConId {
 public:
  explicit ConId(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const ConId&, const ConId&) = default;
  friend auto operator<=>(const ConId&, const ConId&) = default;

 private:
  std::string name_;
};

// Identity of an opaque placeholder created for one binding session.
struct ProbeId {
  std::uint64_t value = 0;

  friend bool operator==(ProbeId, ProbeId) = default;
  friend auto operator<=>(ProbeId, ProbeId) = default;
};

}  // namespace hybrid

template <>
struct std::hash<hybrid::ConId> {
  std::size_t operator()(const hybrid::ConId& c) const noexcept {
    return std::hash<std::string>{}(c.name());
  }
};

#endif  // HYBRID_IDS_HPP
