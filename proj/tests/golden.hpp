#pragma once

// Lift components expanded by tests/oracles/lift_formulas.py.

#include <string>
#include <vector>

#include "jetlift/lifts.hpp"
#include "support.hpp"

namespace golden {

using namespace jetlift;
using support::Named;
using support::named_matrix;
using support::named_vector;

struct Comparison {
  std::string what;
  Space space;
  ResidualFn residual;
};

struct Inputs {
  Tensor11 r;
  OneForm alpha;
  VectorField vertical;
  VectorField time_normalized;
  TwoForm omega;
};

inline Inputs inputs_n1(const char* r_qq, const char* r_qt) {
  const Space e = Space::base(1);
  const auto w = support::f(e, "q1*t");
  TwoForm omega = TwoForm::zero(e);
  omega.set(1, 0, w);
  omega.set(0, 1, -w);
  return {named_matrix(e, {{"q1,q1", r_qq}, {"q1,t", r_qt}}), named_vector<OneForm>(e, {{"t", "q1^2"}, {"q1", "t*q1"}}),
          named_vector<VectorField>(e, {{"q1", "q1^2*t"}}),
          named_vector<VectorField>(e, {{"t", "1"}, {"q1", "sin(q1)*t"}}), omega};
}

inline Inputs inputs_n2() {
  const Space e = Space::base(2);
  return {named_matrix(e, {{"q1,t", "sin(q1)"}, {"q1,q1", "q1*q2"}, {"q1,q2", "t"}, {"q2,t", "t*q2"}, {"q2,q1", "q2^2"}}),
          named_vector<OneForm>(e, {{"t", "q2"}, {"q1", "t*q2"}, {"q2", "q1^2"}}),
          named_vector<VectorField>(e, {{"q1", "q2"}, {"q2", "q1*t"}}),
          named_vector<VectorField>(e, {{"t", "1"}, {"q1", "1"}, {"q2", "t + q1*q2"}}),
          support::two_form(e, {{0, 1, "q2"}, {0, 2, "1"}, {1, 2, "q1*t"}})};
}

struct Expected {
  std::vector<Named> vlift_alpha;
  std::vector<Named> complete_vertical;
  std::vector<Named> complete_time;
  std::vector<Named> vlift_r;
  std::vector<Named> hlift_r;
  std::vector<Named> complete_r;
  std::vector<Named> cotangent_r;
  std::vector<Named> vlift_omega;
};

inline std::vector<Comparison> compare(const Inputs& in, const Expected& ex) {
  const int n = in.r.space().n();
  const Space j = Space::phase(n);
  const Space t = Space::extended(n);
  return {
      {"v(alpha)", j, difference(vlift_oneform(in.alpha), named_vector<VectorField>(j, ex.vlift_alpha))},
      {"lift(X) vertical", j,
       difference(complete_lift_vector(in.vertical), named_vector<VectorField>(j, ex.complete_vertical))},
      {"lift(X) time-normalized", j,
       difference(complete_lift_vector(in.time_normalized), named_vector<VectorField>(j, ex.complete_time))},
      {"v(R)", j, difference(vlift_tensor11(in.r), named_vector<VectorField>(j, ex.vlift_r))},
      {"h(R)", j, difference(hlift_tensor11(in.r), named_vector<OneForm>(j, ex.hlift_r))},
      {"lift(R)", j, difference(complete_lift_tensor11(in.r), named_matrix(j, ex.complete_r))},
      {"lift(R) on T*E", t, difference(complete_lift_cotangent(in.r), named_matrix(t, ex.cotangent_r))},
      {"v(omega)", j, difference(vlift_twoform(in.omega), named_matrix(j, ex.vlift_omega))},
  };
}

/// R = q d/dq (x) dq + t d/dq (x) dt.
inline std::vector<Comparison> torsion_n1() {
  return compare(inputs_n1("q1", "t"),
                 {{{"p1", "q1*t"}},
                  {{"q1", "q1^2*t"}, {"p1", "-2*p1*q1*t"}},
                  {{"t", "1"}, {"q1", "t*sin(q1)"}, {"p1", "-p1*t*cos(q1)"}},
                  {{"p1", "p1*q1"}},
                  {{"q1", "p1*q1"}, {"t", "p1*t"}},
                  {{"q1,q1", "q1"}, {"p1,p1", "q1"}, {"q1,t", "t"}},
                  {{"q1,q1", "q1"}, {"p1,p1", "q1"}, {"q1,t", "t"}, {"p0,p1", "t"}},
                  {{"p1,t", "-q1*t"}}});
}

/// R = (t q^2 + 1) d/dq (x) dq + sin(q) d/dq (x) dt.
inline std::vector<Comparison> mixed_n1() {
  return compare(inputs_n1("t*q1^2 + 1", "sin(q1)"),
                 {{{"p1", "q1*t"}},
                  {{"q1", "q1^2*t"}, {"p1", "-2*p1*q1*t"}},
                  {{"t", "1"}, {"q1", "t*sin(q1)"}, {"p1", "-p1*t*cos(q1)"}},
                  {{"p1", "p1*(q1^2*t + 1)"}},
                  {{"q1", "p1*(q1^2*t + 1)"}, {"t", "p1*sin(q1)"}},
                  {{"q1,q1", "q1^2*t + 1"}, {"p1,p1", "q1^2*t + 1"}, {"q1,t", "sin(q1)"}, {"p1,t", "p1*(q1^2 - cos(q1))"}},
                  {{"q1,q1", "q1^2*t + 1"},
                   {"p1,p1", "q1^2*t + 1"},
                   {"q1,t", "sin(q1)"},
                   {"p0,p1", "sin(q1)"},
                   {"p1,t", "p1*(q1^2 - cos(q1))"},
                   {"p0,q1", "p1*(-q1^2 + cos(q1))"}},
                  {{"p1,t", "-q1*t"}}});
}

inline std::vector<Comparison> general_n2() {
  return compare(inputs_n2(),
                 {{{"p1", "q2*t"}, {"p2", "q1^2"}},
                  {{"q1", "q2"}, {"q2", "q1*t"}, {"p1", "-p2*t"}, {"p2", "-p1"}},
                  {{"t", "1"}, {"q1", "1"}, {"q2", "q1*q2 + t"}, {"p1", "-p2*q2"}, {"p2", "-p2*q1"}},
                  {{"p1", "q2*(p1*q1 + p2*q2)"}, {"p2", "p1*t"}},
                  {{"q1", "q2*(p1*q1 + p2*q2)"}, {"q2", "p1*t"}, {"t", "p1*sin(q1) + p2*q2*t"}},
                  {{"q1,q1", "q1*q2"},
                   {"p1,p1", "q1*q2"},
                   {"q1,q2", "t"},
                   {"p2,p1", "t"},
                   {"q1,t", "sin(q1)"},
                   {"q2,q1", "q2^2"},
                   {"p1,p2", "q2^2"},
                   {"q2,t", "q2*t"},
                   {"p1,q2", "p1*q1 + 2*p2*q2"},
                   {"p2,q1", "-p1*q1 - 2*p2*q2"},
                   {"p1,t", "-p1*cos(q1)"},
                   {"p2,t", "p1 - p2*t"}},
                  {{"q1,q1", "q1*q2"},
                   {"p1,p1", "q1*q2"},
                   {"q1,q2", "t"},
                   {"p2,p1", "t"},
                   {"q1,t", "sin(q1)"},
                   {"p0,p1", "sin(q1)"},
                   {"q2,q1", "q2^2"},
                   {"p1,p2", "q2^2"},
                   {"q2,t", "q2*t"},
                   {"p0,p2", "q2*t"},
                   {"p1,q2", "p1*q1 + 2*p2*q2"},
                   {"p2,q1", "-p1*q1 - 2*p2*q2"},
                   {"p1,t", "-p1*cos(q1)"},
                   {"p0,q1", "p1*cos(q1)"},
                   {"p2,t", "p1 - p2*t"},
                   {"p0,q2", "-p1 + p2*t"}},
                  {{"p1,q2", "-q1*t"}, {"p1,t", "q2"}, {"p2,q1", "q1*t"}, {"p2,t", "1"}}});
}

}  // namespace golden
