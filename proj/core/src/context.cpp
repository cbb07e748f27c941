#include "nilgeo/context.hpp"

#include <cctype>

#include "nilgeo/errors.hpp"

namespace nilgeo {
namespace {

bool valid_symbol_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

ContextPtr ParamContext::make(std::vector<std::string> symbols,
                              std::vector<std::string> positive,
                              std::vector<std::string> nonneg) {
  auto ctx = std::shared_ptr<ParamContext>(new ParamContext());
  ctx->symbols_ = std::move(symbols);
  for (int i = 0; i < static_cast<int>(ctx->symbols_.size()); ++i) {
    const auto& name = ctx->symbols_[i];
    if (!valid_symbol_name(name)) {
      throw UsageError("invalid symbol name: '" + name + "'");
    }
    if (!ctx->index_.emplace(name, i).second) {
      throw UsageError("duplicate symbol name: '" + name + "'");
    }
  }
  for (const auto& name : positive) ctx->positive_.insert(ctx->index_of(name));
  for (const auto& name : nonneg) ctx->nonneg_.insert(ctx->index_of(name));
  return ctx;
}

ContextPtr ParamContext::extend(const std::vector<std::string>& extra) const {
  std::vector<std::string> symbols = symbols_;
  for (const auto& name : extra) {
    if (index_.count(name)) {
      throw UsageError("symbol '" + name + "' already registered");
    }
    symbols.push_back(name);
  }
  return make(std::move(symbols), positive_names(), nonneg_names());
}

int ParamContext::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

int ParamContext::index_of(std::string_view name) const {
  const int i = find(name);
  if (i < 0) throw UsageError("unknown symbol: '" + std::string(name) + "'");
  return i;
}

std::vector<std::string> ParamContext::positive_names() const {
  std::vector<std::string> out;
  for (int i : positive_) out.push_back(symbols_[i]);
  return out;
}

std::vector<std::string> ParamContext::nonneg_names() const {
  std::vector<std::string> out;
  for (int i : nonneg_) out.push_back(symbols_[i]);
  return out;
}

}  // namespace nilgeo
