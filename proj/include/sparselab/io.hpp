#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sparselab/problem.hpp"
#include "sparselab/sparsify.hpp"

namespace sparselab {

/// File formats for instances.
///
/// dimacs-edge: "p edge n m" then "e u v" lines (1-based); directed graphs use
/// "p arc n m" and "a u v". dimacs-cnf / dimacs-wcnf: standard headers, clauses
/// terminated by 0; wcnf weights must be 1. setsystem-text: "p set |C| |S|"
/// then one "s e1 e2 ..." line per set (1-based elements). json: see to_json.
/// Lines starting with 'c' are comments; "c target k" records a CNF target.
enum class Format { DimacsEdge, DimacsCnf, DimacsWcnf, SetSystemText, Json };

std::string_view format_name(Format f);
/// Accepts the names returned by format_name. Throws std::invalid_argument.
Format parse_format(std::string_view text);
/// Format suggested by the file extension, if it is a known one.
std::optional<Format> format_from_extension(const std::filesystem::path& path);
/// Format announced by the first non-comment line of the text.
Format detect_format(std::string_view text);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Throws ParseError on malformed input. Without a format, detect_format is used.
Instance parse_instance(std::string_view text, std::optional<Format> format = std::nullopt);
/// Throws std::invalid_argument when the instance kind does not fit the format.
std::string format_instance(const Instance& instance, Format format);

/// Throws std::runtime_error on I/O failure and ParseError on malformed content.
Instance read_instance(const std::filesystem::path& path, std::optional<Format> format = std::nullopt);
void write_instance(const Instance& instance, const std::filesystem::path& path, Format format);

// JSON forms. Graphs: {"type":"graph","directed":b,"n":n,"edges":[[u,v],...],"labels":[...]}.
// Set systems: {"type":"setsystem","ground":g,"sets":[[...],...]}.
// CNF: {"type":"cnf","num_vars":v,"clauses":[[1,-2],...],"target":k}.
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const SetSystem& s);
nlohmann::json to_json(const CnfInstance& f);
nlohmann::json to_json(const Instance& instance);
/// {"problem":"IS","value":v,"vertices"|"sets"|"elements"|"arcs"|"assignment":[...]}.
nlohmann::json to_json(const Candidate& c);
/// {"committed":[...],"deleted":[...],"leaf":<graph>,"to_root":[...],"depth":d,"path":"..."}.
nlohmann::json to_json(const SparsificationLeaf& leaf);

/// Throw std::invalid_argument (or nlohmann exceptions) on malformed JSON values.
Instance instance_from_json(const nlohmann::json& j);
Candidate candidate_from_json(const nlohmann::json& j);

}  // namespace sparselab
