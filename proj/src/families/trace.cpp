#include "excpoly/families.hpp"

namespace excpoly::families {

unsigned log2_exact(std::uint64_t q) {
  auto e = ff::exact_log(2, q);
  if (!e) throw DomainError("q must be a power of 2");
  return *e;
}

UniPoly trace_poly(std::uint64_t q, const FieldPtr& field) {
  const unsigned e = log2_exact(q);
  if (field->characteristic() != 2) throw DomainError("T(X) is defined in characteristic 2");
  std::vector<Index> c(q / 2 + 1, 0);
  for (unsigned i = 0; i < e; ++i) c[std::size_t{1} << i] = 1;
  return {field, std::move(c)};
}

UniPoly apply_trace(std::uint64_t q, const UniPoly& r) {
  const unsigned e = log2_exact(q);
  UniPoly acc(r.field()), pw = r;
  for (unsigned i = 0; i < e; ++i) {
    acc += pw;
    pw = pw.square();
  }
  return acc;
}

RatFunc apply_trace(std::uint64_t q, const RatFunc& r) {
  const unsigned e = log2_exact(q);
  RatFunc acc(r.field()), pw = r;
  for (unsigned i = 0; i < e; ++i) {
    acc += pw;
    pw = pw.square();
  }
  return acc;
}

Index apply_trace(std::uint64_t q, const ff::Field& field, Index x) {
  const unsigned e = log2_exact(q);
  Index acc = 0;
  for (unsigned i = 0; i < e; ++i) {
    acc = field.add(acc, x);
    x = field.sqr(x);
  }
  return acc;
}

}  // namespace excpoly::families
