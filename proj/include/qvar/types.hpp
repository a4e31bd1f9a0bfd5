#pragma once

#include <array>
#include <string>
#include <string_view>

namespace qvar {

/// The six kinds of query variation. The last four change the surface form
/// of a query without touching its meaning; the first two change meaning and
/// have no generators in this toolkit.
enum class Category {
  GenSpecialization,
  AspectChange,
  Misspelling,
  Naturality,
  Ordering,
  Paraphrasing,
};

inline constexpr std::array<Category, 6> kAllCategories = {
    Category::GenSpecialization, Category::AspectChange, Category::Misspelling,
    Category::Naturality,        Category::Ordering,     Category::Paraphrasing,
};

/// True for categories that alter syntax only (semantics preserved).
constexpr bool syntax_only(Category c) {
  return c == Category::Misspelling || c == Category::Naturality ||
         c == Category::Ordering || c == Category::Paraphrasing;
}

std::string_view to_string(Category c);
Category category_from_string(std::string_view name);

/// The ten variation generator methods.
enum class MethodId {
  NeighbCharSwap,
  RandomCharSub,
  QWERTYCharSub,
  RemoveStopWords,
  T5DescToTitle,
  RandomOrderSwap,
  BackTranslation,
  T5QQP,
  WordEmbedSynSwap,
  WordNetSynSwap,
};

inline constexpr std::array<MethodId, 10> kAllMethods = {
    MethodId::NeighbCharSwap,  MethodId::RandomCharSub,   MethodId::QWERTYCharSub,
    MethodId::RemoveStopWords, MethodId::T5DescToTitle,   MethodId::RandomOrderSwap,
    MethodId::BackTranslation, MethodId::T5QQP,           MethodId::WordEmbedSynSwap,
    MethodId::WordNetSynSwap,
};

Category category_of(MethodId m);
std::string_view to_string(MethodId m);
MethodId method_from_string(std::string_view name);

/// Lifecycle of a variation's validity label. Auto* labels come from rules,
/// Manual* from an annotation session.
enum class Validity {
  AutoValid,
  AutoInvalid,
  NeedsAnnotation,
  ManualValid,
  ManualInvalid,
};

std::string_view to_string(Validity v);
Validity validity_from_string(std::string_view name);

constexpr bool is_valid(Validity v) {
  return v == Validity::AutoValid || v == Validity::ManualValid;
}
constexpr bool is_resolved(Validity v) { return v != Validity::NeedsAnnotation; }

struct Query {
  std::string qid;
  std::string text;  // non-empty after trimming
};

struct Variation {
  std::string qid;
  MethodId method{};
  Category category{};
  std::string text;
  bool identical = false;  // equal to the original after normalization
  Validity validity = Validity::NeedsAnnotation;
};

}  // namespace qvar
