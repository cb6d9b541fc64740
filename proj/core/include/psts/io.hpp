#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psts/analysis.hpp"
#include "psts/configuration.hpp"
#include "psts/constructions.hpp"
#include "psts/transforms.hpp"

namespace psts {

// Configuration documents:
//   # comment
//   points <k> <label_1> ... <label_k>
//   line <a> <b> <c>
Configuration parse_config(std::string_view text);
std::string emit_config(const Configuration& config);

/// Pair assignments written as tokens `{a,b}->z`, separated by whitespace.
Labelling parse_labelling(std::string_view text, const std::vector<std::string>& vertices);
std::string emit_labelling(const Labelling& mu);

// Perspective data documents:
//   m=<m>
//   n=<n>
//   axis=<path of a configuration document>
//   X=<x_1> ... <x_k>
//   mu[i]: {a,b}->z ...        one record per i = 1..m
//   xi[i][j]: <image of x_1> ... <image of x_k>
// Omitted xi records default to the identity on the diagonal and to the
// inverse of the transposed record otherwise.
using AxisLoader = std::function<Configuration(const std::string& path)>;
PerspectiveData parse_perspective(std::string_view text, const AxisLoader& load_axis);
std::string emit_perspective(const PerspectiveData& data, const std::string& axis_path);

/// Reads a perspective document; `axis=` paths resolve against its directory.
PerspectiveData read_perspective_file(const std::filesystem::path& path);

/// `swap p=.. q=.. a1=.. b1=.. a2=.. b2=..`
std::string emit_swap_certificate(const SwapCertificate& cert);
SwapCertificate parse_swap_certificate(std::string_view text);

/// Human-readable listing of free complete subgraphs and their sides.
std::string emit_subgraph_report(const Configuration& config, std::span<const FreeSubgraph> subgraphs);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
Configuration read_config_file(const std::filesystem::path& path);

/// Splits on whitespace.
std::vector<std::string> split_tokens(std::string_view text);

}  // namespace psts
