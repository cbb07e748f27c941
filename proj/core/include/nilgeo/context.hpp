#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nilgeo {

class ParamContext;
using ContextPtr = std::shared_ptr<const ParamContext>;

/// Ordered set of parameter names together with the positivity assumptions
/// under which pivoting decisions are made. Immutable; shared by every
/// polynomial built over it.
class ParamContext {
public:
  static ContextPtr make(std::vector<std::string> symbols,
                         std::vector<std::string> positive = {},
                         std::vector<std::string> nonneg = {});

  /// New context with extra symbols appended (same assumptions otherwise).
  ContextPtr extend(const std::vector<std::string>& extra) const;

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& name(int index) const { return symbols_.at(index); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Index of a symbol, or -1 when absent.
  int find(std::string_view name) const;
  /// Index of a symbol; throws UsageError when absent.
  int index_of(std::string_view name) const;

  bool is_positive(int index) const { return positive_.count(index) != 0; }
  bool is_nonneg(int index) const { return nonneg_.count(index) != 0; }

  std::vector<std::string> positive_names() const;
  std::vector<std::string> nonneg_names() const;

private:
  ParamContext() = default;

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, int> index_;
  std::set<int> positive_;
  std::set<int> nonneg_;
};

}  // namespace nilgeo
