#include "golden.hpp"

#include <cmath>

#include "hk/bounds.hpp"
#include "hk/closedforms.hpp"
#include "hk/volumes.hpp"

namespace hk::cli {

GoldenSuite golden_suite() {
  GoldenSuite suite;
  auto add = [&](std::string id, std::string label, std::function<Rat()> fn,
                 Rat expected) {
    suite.exact.push_back(
        {std::move(id), std::move(label), std::move(fn), std::move(expected)});
  };
  auto addf = [&](std::string id, std::string label,
                  std::function<double()> fn, double expected, double tol) {
    suite.numeric.push_back({std::move(id), std::move(label), std::move(fn),
                             expected, tol});
  };

  // --- central-slab constants (the beta table) ---
  // The d=6 entry is the value produced by all three defining routes
  // (alternating sum, slab volume, sinc quadrature); see the README note
  // on the constants table.
  const Rat beta_table[] = {Rat(1),        Rat(1),       Rat(3, 4), Rat(2, 3),
                            Rat(115, 192), Rat(11, 20),  Rat(5887, 11520)};
  for (int d = 0; d <= 6; ++d)
    add("beta.d" + std::to_string(d), "beta constant, d=" + std::to_string(d),
        [d] { return beta(d); }, beta_table[d]);
  for (int d = 1; d <= 8; ++d)
    add("beta.volume-route.d" + std::to_string(d),
        "beta via slab volume agrees, d=" + std::to_string(d),
        [d] { return beta_via_volume(d) - beta(d); }, Rat(0));
  for (int d = 0; d <= 6; ++d)
    addf("beta.quadrature.d" + std::to_string(d),
         "beta via sinc quadrature, d=" + std::to_string(d),
         [d] { return beta_numeric(d, 1000); }, beta(d).to_double(), 1e-6);

  // --- box-simplex volume identities ---
  add("vol.simplex-cube", "v_1 in dimension 3",
      [] { return box_simplex_volume(3, Rat(1)); }, Rat(1, 6));
  add("vol.half", "v_2 in dimension 4",
      [] { return box_simplex_volume(4, Rat(2)); }, Rat(1, 2));
  add("vol.77-384", "v_{3/2} in dimension 4",
      [] { return box_simplex_volume(4, Rat(3, 2)); }, Rat(77, 384));
  add("vol.complement-half", "v'_{3/2} in dimension 3",
      [] { return box_simplex_complement(3, Rat(3, 2)); }, Rat(1, 2));
  add("vol.beta5-identity", "v_{3/2} = (1 - beta_5)/2 in dimension 4",
      [] { return box_simplex_volume(4, Rat(3, 2)); },
      (Rat(1) - Rat(115, 192)) / Rat(2));
  for (int d = 1; d <= 8; ++d) {
    add("volf.sum.d" + std::to_string(d),
        "v_s + v'_s = 1 at s=4/3, d=" + std::to_string(d),
        [d] {
          return box_simplex_volume(d, Rat(4, 3)) +
                 box_simplex_complement(d, Rat(4, 3));
        },
        Rat(1));
    add("volf.reflect.d" + std::to_string(d),
        "v'_{d-s} = v_s at s=3/4, d=" + std::to_string(d),
        [d] {
          return box_simplex_complement(d, Rat(d) - Rat(3, 4)) -
                 box_simplex_volume(d, Rat(3, 4));
        },
        Rat(0));
    add("volf.half.d" + std::to_string(d),
        "v_{d/2} = 1/2, d=" + std::to_string(d),
        [d] { return box_simplex_volume(d, Rat(d, 2)); }, Rat(1, 2));
    add("volf.unit.d" + std::to_string(d),
        "v_s = s^d/d! at s=2/3, d=" + std::to_string(d),
        [d] {
          return box_simplex_volume(d, Rat(2, 3)) -
                 Rat(2, 3).pow(d) / Rat(factorial(static_cast<unsigned>(d)));
        },
        Rat(0));
  }

  // --- weighted slab and the dimension-4 quadric refinement ---
  add("slab.237-1296", "slab volume, weights (1/2,1/2,1/2,1/3), t=2/3",
      [] {
        return weighted_slab_volume(
            {{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 3)}, Rat(2, 3)});
      },
      Rat(237, 1296));
  add("bound.quadric4d", "weighted bound 2 - 4*(237/1296)",
      [] { return quadric_4d_weighted_bound(); }, Rat(411, 324));
  add("bound.quadric4d-above-5-4", "411/324 exceeds 5/4 by 6/324",
      [] { return quadric_4d_weighted_bound() - Rat(5, 4); }, Rat(6, 324));

  // --- dimension-3 case table ---
  add("key.e2-s2", "key bound (e,d,r,s) = (2,3,1,2)",
      [] { return key_lower_bound(2, 3, 1, Rat(2)); }, Rat(4, 3));
  add("key.e4-s3-2", "key bound (4,3,3,3/2)",
      [] { return key_lower_bound(4, 3, 3, Rat(3, 2)); }, Rat(7, 4));
  add("key.e3-s7-4", "key bound (3,3,2,7/4) = e(289-27e)/384",
      [] { return key_lower_bound(3, 3, 2, Rat(7, 4)); }, Rat(13, 8));
  add("key.e5-s3-2", "key bound (5,3,4,3/2) = e(25-e)/48",
      [] { return key_lower_bound(5, 3, 4, Rat(3, 2)); }, Rat(25, 12));
  for (long long e = 2; e <= 12; ++e) {
    add("key.table-s3-2.e" + std::to_string(e), "f_e(3/2) = e(25-e)/48",
        [e] { return key_lower_bound(e, 3, e - 1, Rat(3, 2)); },
        Rat(e * (25 - e), 48));
    add("key.table-s7-4.e" + std::to_string(e), "f_e(7/4) = e(289-27e)/384",
        [e] { return key_lower_bound(e, 3, e - 1, Rat(7, 4)); },
        Rat(e * (289 - 27 * e), 384));
    add("key.table-s2.e" + std::to_string(e), "f_e(2) = e(6-e)/6",
        [e] { return key_lower_bound(e, 3, e - 1, Rat(2)); },
        Rat(e * (6 - e), 6));
  }
  add("classify3d.e3", "three-dimensional case e=3",
      [] { return classify_3d(3, true).value; }, Rat(13, 8));
  add("classify3d.e4", "three-dimensional case e=4",
      [] { return classify_3d(4, true).value; }, Rat(7, 4));
  add("classify3d.e5", "three-dimensional case e=5",
      [] { return classify_3d(5, true).value; }, Rat(25, 12));
  add("classify3d.e2", "three-dimensional case e=2",
      [] { return classify_3d(2, true).value; }, Rat(4, 3));

  // --- non-F-rational dimension-3 bounds ---
  add("nonfr.e3-s2", "non-F-rational e=3 at s=2: e(7-e)/6",
      [] { return key_lower_bound_nonfr_3d(3, Rat(2)); }, Rat(2));
  add("nonfr.e4-s7-4", "non-F-rational e=4 at s=7/4: e(316-27e)/384",
      [] { return key_lower_bound_nonfr_3d(4, Rat(7, 4)); }, Rat(13, 6));
  add("classify3d.nonfr-e3", "non-F-rational case table e=3",
      [] { return classify_3d(3, false).value; }, Rat(2));
  add("classify3d.nonfr-e4", "non-F-rational case table e=4",
      [] { return classify_3d(4, false).value; }, Rat(13, 6));

  // --- dimension-4 claims ---
  add("classify4d.e3", "e(13-e)/24 at e=3",
      [] { return classify_4d(3).value; }, Rat(30, 24));
  add("classify4d.e10", "e(13-e)/24 at e=10",
      [] { return classify_4d(10).value; }, Rat(30, 24));
  add("classify4d.e11", "e(78-e)/384 at e=11",
      [] { return classify_4d(11).value; }, Rat(737, 384));
  add("classify4d.e30", "e/4! at e=30", [] { return classify_4d(30).value; },
      Rat(30, 24));
  add("key.737-384", "key bound (11,4,10,3/2)",
      [] { return key_lower_bound(11, 4, 10, Rat(3, 2)); }, Rat(737, 384));

  // --- weighted-order hypersurface bounds ---
  add("hyp2est.333", "weight bound (3,3,3)",
      [] { return hypersurface_weight_bound(3, 3, 3).value; }, Rat(55, 32));
  add("hyp2est.233", "weight bound (2,3,3)",
      [] { return hypersurface_weight_bound(2, 3, 3).value; }, Rat(14, 9));
  add("hyp2est.222", "weight bound (2,2,2)",
      [] { return hypersurface_weight_bound(2, 2, 2).value; }, Rat(4, 3));
  for (long long c = 3; c <= 6; ++c) {
    add("hyp2est.22c.c" + std::to_string(c),
        "weight bound (2,2,c) = (9c^2-4)/(6c^2)",
        [c] { return hypersurface_weight_bound(2, 2, c).value; },
        Rat(9 * c * c - 4, 6 * c * c));
    add("a1chain.c" + std::to_string(c),
        "3/2 - 2/(3c^2) matches the (2,2,c) weight bound",
        [c] {
          return a1_chain_bound(c) - hypersurface_weight_bound(2, 2, c).value;
        },
        Rat(0));
  }

  // --- hypersurface beta bound instances ---
  add("betahyp.e3-d3", "beta bound (2/3)*3",
      [] { return beta_hypersurface_bound(3, 3); }, Rat(2));
  add("betahyp.e1-d2", "beta bound (3/4)*1",
      [] { return beta_hypersurface_bound(1, 2); }, Rat(3, 4));

  // --- two-dimensional optimizer attainment ---
  for (long long e : {2LL, 3LL, 5LL, 9LL}) {
    add("opt2d.value.e" + std::to_string(e),
        "max key bound (d=2, r=e-1) = (e+1)/2",
        [e] { return optimize_key_bound(e, 2, e - 1, 2 * e).value; },
        Rat(e + 1, 2));
    add("opt2d.argmax.e" + std::to_string(e),
        "argmax s = (e+1)/e (d=2, r=e-1)",
        [e] { return optimize_key_bound(e, 2, e - 1, 2 * e).s_star; },
        Rat(e + 1, e));
  }
  for (long long e : {3LL, 5LL, 8LL})
    add("opt2d.nonfr.e" + std::to_string(e),
        "max key bound (d=2, r=e-2) = e^2/(2(e-1))",
        [e] { return optimize_key_bound(e, 2, e - 2, 2 * e).value; },
        Rat(e * e, 2 * (e - 1)));

  // --- dimension-3 optimizer suprema ---
  addf("opt3d.sup.e3", "supremum (15+5*sqrt(5))/16 for e=3",
       [] { return key_argmax_closed_form_3d(3); },
       (15.0 + 5.0 * std::sqrt(5.0)) / 16.0, 1e-12);
  addf("opt3d.sup.e4", "supremum (28+8*sqrt(6))/25 for e=4",
       [] { return key_argmax_closed_form_3d(4); },
       (28.0 + 8.0 * std::sqrt(6.0)) / 25.0, 1e-12);

  // --- Veronese closed forms ---
  add("veronese.d2", "(e+1)/2 at d=2, r=5", [] { return veronese_hk(2, 5); },
      Rat(3));
  add("veronese.d3-r2", "dimension 3, order 2",
      [] { return veronese_hk(3, 2); }, Rat(2));
  add("veronese.d3-r4", "(r+1)(r+2)/6 at r=4",
      [] { return veronese_hk(3, 4); }, Rat(5));
  add("veronese.regular", "order 1 is regular",
      [] { return veronese_hk(4, 1); }, Rat(1));

  // --- quadric closed forms and the sec+tan limit ---
  add("quadric.d1", "dimension 1", [] { return quadric_hk(1, 5); }, Rat(2));
  add("quadric.d2", "dimension 2", [] { return quadric_hk(2, 7); },
      Rat(3, 2));
  add("quadric.d3", "dimension 3", [] { return quadric_hk(3, 3); },
      Rat(4, 3));
  add("quadric.d4-p3", "(29p^2+15)/(24p^2+12) at p=3",
      [] { return quadric_hk(4, 3); }, Rat(23, 19));
  add("zigzag.c4", "zigzag number c_4",
      [] { return Rat(zigzag(4).values[4]); }, Rat(5));
  add("monsky.d1", "limit 1 + c_1/1!", [] { return monsky_limit(1); },
      Rat(2));
  add("monsky.d2", "limit 1 + c_2/2!", [] { return monsky_limit(2); },
      Rat(3, 2));
  add("monsky.d3", "limit 1 + c_3/3!", [] { return monsky_limit(3); },
      Rat(4, 3));
  add("monsky.d4", "limit 1 + c_4/4! = 29/24", [] { return monsky_limit(4); },
      Rat(29, 24));

  // --- scroll closed forms ---
  add("scroll.n1", "scroll multiplicity at n=1", [] { return scroll_hk(1); },
      Rat(7, 4));
  add("scroll.integral.n1", "profile integral equals the closed form, n=1",
      [] { return scroll_profile(1).integrate_to_infinity(Rat(0)); },
      Rat(7, 4));
  add("scroll.integral.n2", "profile integral equals the closed form, n=2",
      [] { return scroll_profile(2).integrate_to_infinity(Rat(0)); },
      Rat(20, 9));
  add("scroll.profile-zero", "profile vanishes from t=2 on, n=1",
      [] { return scroll_profile(1).eval(Rat(5, 2)); }, Rat(0));
  add("scroll.profile-start", "profile is (n+2)t^2/2 on [0,1), n=3",
      [] { return scroll_profile(3).eval(Rat(1, 2)); }, Rat(5, 8));

  return suite;
}

}  // namespace hk::cli
