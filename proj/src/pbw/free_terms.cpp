#include "pbwkit/error.hpp"
#include "pbwkit/pbw/resolution.hpp"

namespace pbwkit::pbw {

namespace {

std::size_t power(std::size_t base, int e) {
  std::size_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

FreeContext::FreeContext(const QuadraticPresentation& pres, int deg_max)
    : b_(pres, deg_max), deg_max_(deg_max), r_(pres.R_bimodule()), s_(Bimodule::regular(pres.S())) {
  one_ = SparseVec::from_dense(pres.S().unit());
  for (Factor n : {Factor::R, Factor::M, Factor::S})
    for (int b = 0; b <= deg_max; ++b) outer_.emplace(std::pair{static_cast<int>(n), b}, algebra::TensorSpace(factor(n), b_.bimodule(b)));
}

const Bimodule& FreeContext::factor(Factor n) const {
  switch (n) {
    case Factor::R: return r_;
    case Factor::M: return b_.presentation().M();
    case Factor::S: return s_;
  }
  return s_;
}

const algebra::TensorSpace& FreeContext::outer(Factor n, int b) const {
  auto it = outer_.find({static_cast<int>(n), b});
  if (it == outer_.end()) throw Error(ErrorCode::CapExceeded, "free term degree " + std::to_string(b) + " beyond deg_max");
  return it->second;
}

const SparseVec& FreeContext::bmul(int i, std::size_t x, int j, std::size_t y) const {
  auto key = std::tuple{i, x, j, y};
  auto it = products_.find(key);
  if (it != products_.end()) return it->second;
  const Scalar one = field().one();
  return products_.emplace(key, b_.multiply(i, SparseVec::unit(x, one), j, SparseVec::unit(y, one))).first->second;
}

FreeTerm::FreeTerm(std::shared_ptr<const FreeContext> ctx, int s_factors, Factor n)
    : ctx_(std::move(ctx)), i_(s_factors), n_(n), stm_(power(ctx_->S().dim(), s_factors)) {}

std::size_t FreeTerm::generators() const { return stm_ * ctx_->factor(n_).dim(); }

std::size_t FreeTerm::dim(int degree) const {
  std::size_t out = 0;
  const int top = degree - generator_degree();
  for (int a = 0; a <= top; ++a) out += ctx_->B().dim(a) * stm_ * ctx_->outer(n_, top - a).dim();
  return out;
}

std::size_t FreeTerm::index(int degree, int a, std::size_t x, std::size_t st, std::size_t q) const {
  const int top = degree - generator_degree();
  std::size_t off = 0;
  for (int c = 0; c < a; ++c) off += ctx_->B().dim(c) * stm_ * ctx_->outer(n_, top - c).dim();
  return off + (x * stm_ + st) * ctx_->outer(n_, top - a).dim() + q;
}

FreeTerm::Pos FreeTerm::decode(int degree, std::size_t i) const {
  const int top = degree - generator_degree();
  for (int a = 0; a <= top; ++a) {
    const std::size_t dq = ctx_->outer(n_, top - a).dim(), block = ctx_->B().dim(a) * stm_ * dq;
    if (i < block) return {a, i / dq / stm_, (i / dq) % stm_, i % dq};
    i -= block;
  }
  throw Error(ErrorCode::DimensionMismatch, "free term index out of range");
}

void FreeTerm::add_pure(SparseBuilder& out, int degree, int a, const SparseVec& x, std::size_t st, const SparseVec& n,
                        int b, const SparseVec& y, const Scalar& c) const {
  if (c.is_zero()) return;
  const SparseVec q = ctx_->outer(n_, b).project(n, y);
  for (const auto& ex : x)
    for (const auto& eq : q) out.add(index(degree, a, ex.index, st, eq.index), c * ex.value * eq.value);
}

SparseVec FreeTerm::generator(std::size_t g) const {
  const std::size_t dn = ctx_->factor(n_).dim();
  SparseBuilder out;
  add_pure(out, generator_degree(), 0, ctx_->one(), g / dn, SparseVec::unit(g % dn, ctx_->field().one()), 0, ctx_->one(),
           ctx_->field().one());
  return out.finish();
}

SparseVec FreeTerm::left_multiply(int degree, const SparseVec& e, int a, std::size_t x) const {
  SparseBuilder out;
  for (const auto& en : e) {
    Pos p = decode(degree, en.index);
    for (const auto& m : ctx_->bmul(a, x, p.a, p.x)) out.add(index(degree + a, a + p.a, m.index, p.st, p.q), en.value * m.value);
  }
  return out.finish();
}

SparseVec FreeTerm::right_multiply(int degree, const SparseVec& e, int b, std::size_t y) const {
  SparseBuilder out;
  const Scalar one = ctx_->field().one();
  for (const auto& en : e) {
    Pos p = decode(degree, en.index);
    const int pb = degree - generator_degree() - p.a;
    auto [n, yy] = ctx_->outer(n_, pb).lift_pair(p.q);
    const SparseVec q = ctx_->outer(n_, pb + b).project(SparseVec::unit(n, one), ctx_->bmul(pb, yy, b, y));
    for (const auto& eq : q) out.add(index(degree + b, p.a, p.x, p.st, eq.index), en.value * eq.value);
  }
  return out.finish();
}

SparseVec FreeMap::apply(int degree, const SparseVec& e) const {
  const FreeContext& ctx = source->context();
  const std::size_t dn = ctx.factor(source->factor()).dim();
  const int gs = source->generator_degree();
  SparseBuilder out;
  for (const auto& en : e) {
    FreeTerm::Pos p = source->decode(degree, en.index);
    const int b = degree - gs - p.a;
    auto [n, y] = ctx.outer(source->factor(), b).lift_pair(p.q);
    const SparseVec& img = images.at(p.st * dn + n);
    if (img.empty()) continue;
    SparseVec l = target->left_multiply(gs, img, p.a, p.x);
    out.add(target->right_multiply(gs + p.a, l, b, y), en.value);
  }
  return out.finish();
}

SparseMatrix FreeMap::matrix(int degree) const {
  const FieldSpec f = source->context().field();
  SparseMatrix m(f, target->dim(degree), source->dim(degree));
  for (std::size_t c = 0; c < m.cols(); ++c) m.set_column(c, apply(degree, SparseVec::unit(c, f.one())));
  return m;
}

FreeMap FreeMap::compose_after(const FreeMap& first) const {
  FreeMap out{first.source, target, {}};
  const int gd = first.source->generator_degree();
  for (const auto& img : first.images) out.images.push_back(apply(gd, img));
  return out;
}

FreeMap bar_differential(std::shared_ptr<const FreeTerm> source, std::shared_ptr<const FreeTerm> target) {
  const int i = source->s_factors();
  if (i < 1 || target->s_factors() != i - 1 || target->factor() != source->factor())
    throw Error(ErrorCode::DimensionMismatch, "bar differential needs matching free terms");
  const FreeContext& ctx = source->context();
  const FiniteAlgebra& s = ctx.S();
  const FieldSpec f = ctx.field();
  const Bimodule& nmod = ctx.factor(source->factor());
  const std::size_t ds = s.dim(), dn = nmod.dim();
  const int gd = source->generator_degree();
  FreeMap out{source, target, {}};
  std::vector<std::size_t> digits(i);
  for (std::size_t g = 0; g < source->generators(); ++g) {
    std::size_t st = g / dn;
    const std::size_t n = g % dn;
    for (int k = i - 1; k >= 0; --k) {
      digits[k] = st % ds;
      st /= ds;
    }
    auto encode = [&](const std::vector<std::size_t>& d) {
      std::size_t v = 0;
      for (std::size_t x : d) v = v * ds + x;
      return v;
    };
    const SparseVec en = SparseVec::unit(n, f.one());
    SparseBuilder img;
    // b s_1 (x) s_2 ... s_i (x) n (x) b'
    std::vector<std::size_t> rest(digits.begin() + 1, digits.end());
    target->add_pure(img, gd, 0, SparseVec::unit(digits[0], f.one()), encode(rest), en, 0, ctx.one(), f.one());
    for (int k = 1; k < i; ++k) {
      const Scalar sign = f.from_int(k % 2 ? -1 : 1);
      for (const auto& p : s.product_sparse(digits[k - 1], digits[k])) {
        std::vector<std::size_t> d;
        for (int j = 0; j < i; ++j) {
          if (j == k) continue;
          d.push_back(j == k - 1 ? p.index : digits[j]);
        }
        target->add_pure(img, gd, 0, ctx.one(), encode(d), en, 0, ctx.one(), sign * p.value);
      }
    }
    std::vector<std::size_t> head(digits.begin(), digits.end() - 1);
    target->add_pure(img, gd, 0, ctx.one(), encode(head), nmod.left(digits[i - 1]).column(n), 0, ctx.one(),
                     f.from_int(i % 2 ? -1 : 1));
    out.images.push_back(img.finish());
  }
  return out;
}

}  // namespace pbwkit::pbw
