#ifndef BGLAB_IO_HPP_
#define BGLAB_IO_HPP_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "bglab/algebra.hpp"

namespace bglab {

  //! Algebra file object: kind, size, labels, mul, add?, star?, meta.
  nlohmann::json to_json(FiniteAlgebra const& alg);
  //! Throws InvalidAlgebra on malformed input.
  FiniteAlgebra from_json(nlohmann::json const& j);

  //! Deterministic text: fixed key order, one table row per line.
  std::string dump_algebra(FiniteAlgebra const& alg);

  //! Paths ending in ".gz" are gzip-compressed.
  std::string read_text(std::filesystem::path const& path);
  void        write_text(std::filesystem::path const& path, std::string const& text);

  FiniteAlgebra load_algebra(std::filesystem::path const& path);
  void          save_algebra(std::filesystem::path const& path, FiniteAlgebra const& alg);

  //! A JSON array of labels or indices naming elements of `alg`.
  ElementSet element_set_from_json(FiniteAlgebra const& alg, nlohmann::json const& j);

}  // namespace bglab

#endif  // BGLAB_IO_HPP_
