#pragma once

#include <lda/coloring.hpp>
#include <lda/constructions.hpp>
#include <lda/graph.hpp>
#include <lda/labeling.hpp>
#include <lda/solver.hpp>

#include <optional>
#include <string>

namespace lda {

// JSON documents, written compactly with a trailing newline. Readers accept
// either the bare object or any object that nests it under "graph",
// "labels" or "signs", so construction output can be piped straight back in.
// Malformed input throws ErrorKind::parse.

auto graph_to_json(const Graph & g) -> std::string;
auto graph_from_json(const std::string & text) -> Graph;

auto labeling_to_json(const Labeling & f) -> std::string;
auto labeling_from_json(const std::string & text) -> Labeling;
// Empty when the document has no "labels" key.
auto find_labeling(const std::string & text) -> std::optional<Labeling>;

auto signs_to_json(const SignColoring & sigma) -> std::string;
auto signs_from_json(const std::string & text) -> SignColoring;
auto find_signs(const std::string & text) -> std::optional<SignColoring>;

auto report_to_json(const VerificationReport & report) -> std::string;
auto census_to_json(const Graph & g, const SignColoring & sigma) -> std::string;
// Carries the graph and, when found, the witness as "labels" so it can be piped to verify.
auto solve_result_to_json(const Graph & g, const SolveResult & result) -> std::string;
auto construction_to_json(const ConstructionResult & result) -> std::string;
auto error_to_json(const std::string & kind, const std::string & message) -> std::string;

// Vertices are filled by weight class when a labeling is given.
auto to_dot(const Graph & g, const std::optional<Labeling> & f = std::nullopt) -> std::string;

} // namespace lda
