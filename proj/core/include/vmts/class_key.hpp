#ifndef VMTS_CLASS_KEY_HPP_
#define VMTS_CLASS_KEY_HPP_

#include <compare>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace vmts {

// Canonical label of a transaction equivalence class; the unit of willing and
// of liveness obligations. Labels have the shape "kind(payload)" where the
// payload is a normalized rendering of the participants and any parameters,
// so structural equality of labels coincides with class equality.
class ClassKey {
 public:
  ClassKey() = default;
  explicit ClassKey(std::string label) : label_(std::move(label)) {}

  const std::string& label() const { return label_; }

  // Text before the first '(', e.g. "befriend", "mint", "propagate".
  std::string_view kind() const {
    const auto pos = label_.find('(');
    return std::string_view(label_).substr(0, pos);
  }

  bool operator==(const ClassKey&) const = default;
  auto operator<=>(const ClassKey&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const ClassKey& k) {
    return os << k.label_;
  }

 private:
  std::string label_;
};

using ClassKeySet = std::set<ClassKey>;

}  // namespace vmts

#endif  // VMTS_CLASS_KEY_HPP_
