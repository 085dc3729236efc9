#pragma once

#include <map>

#include "logdegen/formula.hpp"

namespace logdegen {

/// One stored relative invariant: insertions refer to basis elements by
/// index (absolute over H*(X_r), relative over H*(D)).
struct InvariantRecord {
    int r = 1;
    int g = 0;
    Vec beta;
    std::vector<std::pair<int, int>> absolute;  // (psi power, basis index)
    std::vector<std::pair<Int, int>> relative;  // (contact order, basis index)
    Rat value;
};

/// Table of invariants, multilinear in every insertion: queries are
/// expanded to basis elements, insertion order is normalized with the
/// Koszul sign tracked. Unknown entries answer nullopt.
class TableProvider : public InvariantProvider {
  public:
    TableProvider(const TargetModel& t, const std::vector<InvariantRecord>& records);
    std::optional<Rat> lookup(const TargetModel& t, const CorrelatorQuery& q) const override;

  private:
    std::map<std::vector<Int>, Rat> table_;
};

/// Answers every query with the same value.
class ConstantProvider : public InvariantProvider {
  public:
    explicit ConstantProvider(Rat value) : value_(std::move(value)) {}
    std::optional<Rat> lookup(const TargetModel&, const CorrelatorQuery&) const override {
        return value_;
    }

  private:
    Rat value_;
};

/// Product of the relative contact orders; weight-sensitive regression
/// provider.
class MultiplicativeProvider : public InvariantProvider {
  public:
    std::optional<Rat> lookup(const TargetModel&, const CorrelatorQuery& q) const override {
        Rat v = 1;
        for (const auto& rel : q.relative) v *= Rat(rel.w);
        return v;
    }
};

/// Multilinear provider: applies fixed linear functionals to every
/// inserted class (f_x per component on H*(X_r), f_d on H*(D)) and
/// multiplies. Being multilinear, it respects changes of basis.
class FunctionalProvider : public InvariantProvider {
  public:
    FunctionalProvider(QVec fx1, QVec fx2, QVec fd)
        : fx1_(std::move(fx1)), fx2_(std::move(fx2)), fd_(std::move(fd)) {}
    std::optional<Rat> lookup(const TargetModel&, const CorrelatorQuery& q) const override {
        Rat v = 1;
        for (const auto& a : q.absolute) v *= qdot(q.r == 1 ? fx1_ : fx2_, a.cls.coeffs);
        for (const auto& rel : q.relative) v *= qdot(fd_, rel.cls.coeffs);
        v.canonicalize();
        return v;
    }

  private:
    QVec fx1_, fx2_, fd_;
};

}  // namespace logdegen
