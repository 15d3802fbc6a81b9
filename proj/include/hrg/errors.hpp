#pragma once

#include <stdexcept>
#include <string>

namespace hrg {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct duplicate_id_error : error {
  explicit duplicate_id_error(const std::string& id)
      : error("duplicate identifier: " + id) {}
};

struct dangling_endpoint_error : error {
  dangling_endpoint_error(const std::string& edge, const std::string& vertex)
      : error("edge " + edge + " references undeclared vertex " + vertex) {}
};

struct color_out_of_range_error : error {
  color_out_of_range_error(const std::string& what, int color)
      : error(what + ": color " + std::to_string(color) + " out of range") {}
};

struct unknown_vertex_error : error {
  explicit unknown_vertex_error(const std::string& id)
      : error("unknown vertex: " + id) {}
};

struct unknown_edge_error : error {
  explicit unknown_edge_error(const std::string& id)
      : error("unknown edge: " + id) {}
};

struct uncovered_path_error : error {
  explicit uncovered_path_error(const std::string& desc)
      : error("2-path not covered by any square: " + desc) {}
};

struct target_not_permutation_error : error {
  explicit target_not_permutation_error(const std::string& desc)
      : error("target word is not a permutation of the path's color word: " + desc) {}
};

struct kg2_not_established_error : error {
  kg2_not_established_error() : error("KG3 check requires a passing KG2 report") {}
};

struct not_composable_configuration_error : error {
  explicit not_composable_configuration_error(const std::string& desc)
      : error("squares do not form a cube configuration: " + desc) {}
};

struct hypotheses_not_met_error : error {
  explicit hypotheses_not_met_error(const std::string& desc)
      : error("move hypotheses not met: " + desc) {}
};

struct induced_square_ambiguity_error : error {
  explicit induced_square_ambiguity_error(const std::string& desc)
      : error("induced square not unique: " + desc) {}
};

struct bridge_color_error : error {
  explicit bridge_color_error(int b)
      : error("bridge color " + std::to_string(b) + " not in the chosen color set") {}
};

struct not_injective_omega_error : error {
  not_injective_omega_error()
      : error("monoid map has no integer left inverse; cannot induce a realization") {}
};

struct invalid_parameter_error : error {
  explicit invalid_parameter_error(const std::string& desc)
      : error("invalid parameter: " + desc) {}
};

struct syntax_error : error {
  syntax_error(int line, int column, const std::string& expected)
      : error("syntax error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": expected " + expected),
        line(line), column(column) {}
  int line;
  int column;
};

struct semantic_error : error {
  explicit semantic_error(const std::string& desc)
      : error("semantic error: " + desc) {}
};

}  // namespace hrg
