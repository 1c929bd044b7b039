#include "pmc/reduction.hpp"

#include <string>

#include "pmc/errors.hpp"

namespace pmc {

std::int64_t height(std::span<const Operation> parens) {
  std::int64_t h = 0;
  for (const auto& op : parens) {
    if (op.kind == OpKind::Open) ++h;
    if (op.kind == OpKind::Close) --h;
  }
  return h;
}

PsiTransform::PsiTransform(std::uint64_t length) : length_(length) {
  if (length > kMaxValue / 4) throw ParamError("length too large for the value range");
}

Operation PsiTransform::push(const Operation& paren) {
  if (!paren.is_paren()) throw KindError("the reduction consumes parentheses only");
  if (++consumed_ > length_) {
    throw FormatError("more than the declared " + std::to_string(length_) + " parentheses");
  }
  const auto base = 2 * static_cast<std::int64_t>(length_);
  const std::int64_t type_shift = paren.paren == Paren::B ? 1 : 0;
  if (paren.kind == OpKind::Open) {
    const auto v = base - 2 * height_ - type_shift;
    ++height_;
    return Operation::ins(static_cast<Value>(v));
  }
  --height_;
  return Operation::ext(static_cast<Value>(base - 2 * height_ - type_shift));
}

void PsiTransform::finish() const {
  if (consumed_ != length_) {
    throw FormatError("expected " + std::to_string(length_) + " parentheses, got " +
                      std::to_string(consumed_));
  }
}

Transcript psi(std::span<const Operation> parens, std::uint64_t length) {
  PsiTransform transform(length);
  Transcript out;
  out.reserve(parens.size());
  for (const auto& p : parens) out.push_back(transform.push(p));
  transform.finish();
  return out;
}

}  // namespace pmc
