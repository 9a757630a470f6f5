#include "samop/json_io.hpp"

namespace samop {

using nlohmann::json;

json to_json(const ExtNat& v) {
  if (v.is_inf()) return json("inf");
  return json(v.finite());
}

json to_json(const GaussianRational& z) { return json(z.str()); }

json to_json(const FredholmSignature& s) {
  return json{{"alpha", to_json(s.alpha)},   {"beta", to_json(s.beta)},
              {"range_closed", s.range_closed}, {"asc", to_json(s.asc)},
              {"des", to_json(s.des)},       {"smul", to_json(s.smul)},
              {"bsmul", to_json(s.bsmul)}};
}

json to_json(const FredholmClass& c) {
  return json{{"invertible", c.invertible},
              {"left_invertible", c.left_invertible},
              {"right_invertible", c.right_invertible},
              {"fredholm", c.fredholm},
              {"upper_semi_fredholm", c.upper_semi_fredholm},
              {"lower_semi_fredholm", c.lower_semi_fredholm},
              {"semi_fredholm", c.semi_fredholm},
              {"browder", c.browder},
              {"upper_semi_browder", c.upper_semi_browder},
              {"lower_semi_browder", c.lower_semi_browder},
              {"shift_like", c.shift_like},
              {"backward_shift_like", c.backward_shift_like},
              {"stationary", c.stationary}};
}

json to_json(const RegionCell& c) {
  switch (c.kind) {
    case RegionCell::Kind::Point:
      return json{{"kind", "point"}, {"z", to_json(c.c1)}};
    case RegionCell::Kind::Circle:
      return json{{"kind", "circle"}, {"center", to_json(c.c1)}, {"r2", rational_str(c.a)}};
    case RegionCell::Kind::Annulus: {
      json j{{"kind", "annulus"}, {"center", to_json(c.c1)}, {"inner_r2", rational_str(c.a)}};
      if (c.b_infinite)
        j["outer_r2"] = "inf";
      else
        j["outer_r2"] = rational_str(c.b);
      return j;
    }
    case RegionCell::Kind::RootPair:
      return json{{"kind", "root_pair"},
                  {"circle1", json{{"center", to_json(c.c1)}, {"r2", rational_str(c.a)}}},
                  {"circle2", json{{"center", to_json(c.c2)}, {"r2", rational_str(c.b)}}}};
  }
  return json();
}

json to_json(const Region& r) {
  json cells = json::array();
  for (const RegionCell& c : r.cells()) cells.push_back(to_json(c));
  return json{{"cells", cells}, {"description", r.describe()}};
}

json to_json(const ChainCensus& c) {
  json chains = json::object();
  for (const auto& [len, cnt] : c.finite_chains)
    if (!cnt.is_zero()) chains[std::to_string(len)] = to_json(cnt);
  return json{{"finite_chains", chains},
              {"forward_rays", to_json(c.forward_rays)},
              {"backward_rays", to_json(c.backward_rays)},
              {"bi_infinite", to_json(c.bi_infinite)}};
}

json to_json(const WitnessMap& w) {
  json entries = json::array();
  for (const WitnessEntry& e : w.entries) {
    json je{{"src_group", e.src_group},
            {"dst_group", e.dst_group},
            {"paired", to_json(e.paired)},
            {"weight", to_json(e.weight)}};
    switch (e.policy) {
      case PairingPolicy::Exact:
        je["policy"] = "exact";
        break;
      case PairingPolicy::ExhaustSrc:
        je["policy"] = "exhaust_src";
        break;
      case PairingPolicy::ExhaustDst:
        je["policy"] = "exhaust_dst";
        break;
      case PairingPolicy::ExhaustBoth:
        je["policy"] = "exhaust_both";
        break;
    }
    if (!e.members.empty()) {
      json ms = json::array();
      for (const auto& [s, d] : e.members) ms.push_back(json::array({s, d}));
      je["members"] = ms;
    }
    entries.push_back(je);
  }
  return json{{"entries", entries}, {"pair_rays", w.from_pair_rays}};
}

json to_json(const NormalForm3& nf) {
  return json{{"t1_right_invertible", to_json(nf.t1)},
              {"t2_left_invertible", to_json(nf.t2)},
              {"t3_nilpotent", to_json(nf.t3)},
              {"ind_t1", to_json(nf.ind_t1)},
              {"neg_ind_t2", to_json(nf.neg_ind_t2)},
              {"h3_dim", nf.h3_dim}};
}

json to_json(const CompletionVerdict& v) {
  json j{{"possible", v.possible}, {"rule", v.rule}, {"detail", v.detail}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.assembled) {
    j["assembled_census"] = to_json(chain_census(v.assembled));
    j["assembled_class"] = to_json(classify(v.assembled));
  }
  return j;
}

json to_json(const TruncationReport& r) {
  return json{{"n", r.n},
              {"k_max", r.k_max},
              {"dim", r.dim},
              {"predicted", r.predicted},
              {"computed", r.computed},
              {"match", r.match}};
}

}  // namespace samop
