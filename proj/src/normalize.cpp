/* Copyright 2026 The cjhol Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cjhol/hol.hpp"

namespace cjhol {

namespace {


// Weak head normal form under normal-order reduction.
HolTerm whnf(const HolTerm& t) {
  if (!t.is_app()) return t;
  HolTerm fun = whnf(t.fun());
  if (fun.is_abs()) return whnf(substitute(fun.body(), t.arg()));
  return HolTerm::app(fun, t.arg());
}

HolTerm normal_order(const HolTerm& t) {
  switch (t.kind()) {
    case HolTerm::Kind::kAbs:
      return HolTerm::abs(t.type(), normal_order(t.body()), t.name());
    case HolTerm::Kind::kApp: {
      HolTerm fun = whnf(t.fun());
      if (fun.is_abs()) return normal_order(substitute(fun.body(), t.arg()));
      return HolTerm::app(normal_order(fun), normal_order(t.arg()));
    }
    default:
      return t;
  }
}

// Rightmost-innermost: the argument, then the operator, then the
// redex they form (if any).
HolTerm innermost(const HolTerm& t) {
  switch (t.kind()) {
    case HolTerm::Kind::kAbs:
      return HolTerm::abs(t.type(), innermost(t.body()), t.name());
    case HolTerm::Kind::kApp: {
      HolTerm arg = innermost(t.arg());
      HolTerm fun = innermost(t.fun());
      if (fun.is_abs()) return innermost(substitute(fun.body(), arg));
      return HolTerm::app(std::move(fun), std::move(arg));
    }
    default:
      return t;
  }
}

}  // namespace

HolTerm beta_normalize(const HolTerm& t, Strategy strategy) {
  return strategy == Strategy::kNormalOrder ? normal_order(t) : innermost(t);
}

HolTerm eta_normalize(const HolTerm& t) {
  switch (t.kind()) {
    case HolTerm::Kind::kAbs: {
      HolTerm body = eta_normalize(t.body());
      // \X. (s X) with X not free in s
      if (body.is_app() && body.arg().is_bound() && body.arg().index() == 0 &&
          !has_loose_bound(body.fun(), 0)) {
        return shift(body.fun(), -1);
      }
      return HolTerm::abs(t.type(), std::move(body), t.name());
    }
    case HolTerm::Kind::kApp:
      return HolTerm::app(eta_normalize(t.fun()), eta_normalize(t.arg()));
    default:
      return t;
  }
}

HolTerm beta_eta_normalize(const HolTerm& t, Strategy strategy) {
  return eta_normalize(beta_normalize(t, strategy));
}

bool has_beta_redex(const HolTerm& t) {
  switch (t.kind()) {
    case HolTerm::Kind::kApp:
      return t.fun().is_abs() || has_beta_redex(t.fun()) || has_beta_redex(t.arg());
    case HolTerm::Kind::kAbs:
      return has_beta_redex(t.body());
    default:
      return false;
  }
}

bool has_eta_redex(const HolTerm& t) {
  switch (t.kind()) {
    case HolTerm::Kind::kApp:
      return has_eta_redex(t.fun()) || has_eta_redex(t.arg());
    case HolTerm::Kind::kAbs: {
      const HolTerm& body = t.body();
      if (body.is_app() && body.arg().is_bound() && body.arg().index() == 0 &&
          !has_loose_bound(body.fun(), 0)) {
        return true;
      }
      return has_eta_redex(body);
    }
    default:
      return false;
  }
}

}  // namespace cjhol
