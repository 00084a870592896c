#pragma once

// JSON interchange for objects, maps, categories, set functors and chains.
// Serialization is canonical: generators in (degree, id) order and object
// keys sorted, so save(load(file)) reproduces a canonical file byte for byte.

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "segalkit/cylinder.hpp"
#include "segalkit/yoneda.hpp"

namespace segalkit {

using Json = nlohmann::json;

/// Malformed or schema-invalid input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <std::size_t K>
Json cellset_to_json(const CellSet<K>& x);
template <std::size_t K>
CellSetPtr<K> cellset_from_json(const Json& j);

/// Maps embed their source and target.
template <std::size_t K>
Json map_to_json(const CellMap<K>& f);
template <std::size_t K>
CellMap<K> map_from_json(const Json& j);
/// A map given by its assignment only, between known objects.
template <std::size_t K>
CellMap<K> map_from_assignment(const Json& assignment, const CellSetPtr<K>& source,
                               const CellSetPtr<K>& target);

Json fincat_to_json(const FinCat& c);
FinCat fincat_from_json(const Json& j);

/// A set-valued functor together with its category.
struct FunctorFile {
  FinCat category;
  SetFunctor functor;
};
Json functor_to_json(const FinCat& c, const SetFunctor& f);
FunctorFile functor_from_json(const Json& j);

Json chain_to_json(const ChainOverB& c);
ChainOverB chain_from_json(const Json& j);

/// The "kind" field; throws ParseError when absent.
std::string kind_of(const Json& j);
/// Whether a map file is between simplicial ("sset") or bisimplicial sets.
std::string map_space(const Json& j);

/// Reads and parses a file; errors name the file.
Json read_json_file(const std::filesystem::path& path);
/// The canonical text form: two-space indentation, sorted keys, final newline.
std::string canonical(const Json& j);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace segalkit
