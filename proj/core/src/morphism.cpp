#include <algorithm>
#include <string>

#include "bglab/checker.hpp"
#include "bglab/errors.hpp"

namespace bglab {

  MorphismReport verify_morphism(FiniteAlgebra const&        source,
                                 FiniteAlgebra const&        target,
                                 std::vector<Element> const& map,
                                 Signature                   signature) {
    if (map.size() != source.size()) {
      throw MapNotTotal("map has " + std::to_string(map.size()) + " images for "
                        + std::to_string(source.size()) + " source elements");
    }
    for (auto y : map) {
      if (y >= target.size()) {
        throw MapNotTotal("image " + std::to_string(y) + " is outside the target");
      }
    }
    if (signature.add && !(source.has_add() && target.has_add())) {
      throw MissingTable("addition requested but not present in both algebras");
    }
    if (signature.star && !(source.has_star() && target.has_star())) {
      throw MissingStar("star requested but not present in both algebras");
    }

    MorphismReport report;
    std::vector<char> hit(target.size(), 0);
    report.injective = true;
    for (auto y : map) {
      report.injective = report.injective && !hit[y];
      hit[y]           = 1;
    }
    report.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

    auto const n   = static_cast<Element>(source.size());
    auto binary    = [&](char const* name, auto src_op, auto dst_op) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (map[src_op(x, y)] != dst_op(map[x], map[y])) {
            report.ok      = false;
            report.op      = name;
            report.witness = {x, y};
            return false;
          }
        }
      }
      return true;
    };
    if (signature.mul
        && !binary("mul", [&](Element x, Element y) { return source.mul(x, y); },
                   [&](Element x, Element y) { return target.mul(x, y); })) {
      return report;
    }
    if (signature.add
        && !binary("add", [&](Element x, Element y) { return source.add(x, y); },
                   [&](Element x, Element y) { return target.add(x, y); })) {
      return report;
    }
    if (signature.star) {
      for (Element x = 0; x < n; ++x) {
        if (map[source.star(x)] != target.star(map[x])) {
          report.ok      = false;
          report.op      = "star";
          report.witness = {x};
          return report;
        }
      }
    }
    return report;
  }

  MorphismReport verify_morphism(MorphismSpec const& spec) {
    return verify_morphism(spec.source, spec.target, spec.map, spec.signature);
  }

  MorphismReport verify_morphism(FiniteAlgebra const&                      source,
                                 FiniteAlgebra const&                      target,
                                 std::map<std::string, std::string> const& map,
                                 Signature                                 signature) {
    std::vector<Element> images(source.size());
    for (Element x = 0; x < source.size(); ++x) {
      auto it = map.find(source.label(x));
      if (it == map.end()) {
        throw MapNotTotal("no image for " + source.label(x));
      }
      auto y = target.find(it->second);
      if (!y) {
        throw MapNotTotal("image " + it->second + " is not an element of the target");
      }
      images[x] = *y;
    }
    return verify_morphism(source, target, images, signature);
  }

}  // namespace bglab
