#include "qvar/types.hpp"

#include <stdexcept>

#include "qvar/errors.hpp"

namespace qvar {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::GenSpecialization: return "GenSpecialization";
    case Category::AspectChange: return "AspectChange";
    case Category::Misspelling: return "Misspelling";
    case Category::Naturality: return "Naturality";
    case Category::Ordering: return "Ordering";
    case Category::Paraphrasing: return "Paraphrasing";
  }
  return "?";
}

Category category_from_string(std::string_view name) {
  for (Category c : kAllCategories) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown category: " + std::string(name));
}

Category category_of(MethodId m) {
  switch (m) {
    case MethodId::NeighbCharSwap:
    case MethodId::RandomCharSub:
    case MethodId::QWERTYCharSub: return Category::Misspelling;
    case MethodId::RemoveStopWords:
    case MethodId::T5DescToTitle: return Category::Naturality;
    case MethodId::RandomOrderSwap: return Category::Ordering;
    case MethodId::BackTranslation:
    case MethodId::T5QQP:
    case MethodId::WordEmbedSynSwap:
    case MethodId::WordNetSynSwap: return Category::Paraphrasing;
  }
  throw std::invalid_argument("unknown method id");
}

std::string_view to_string(MethodId m) {
  switch (m) {
    case MethodId::NeighbCharSwap: return "NeighbCharSwap";
    case MethodId::RandomCharSub: return "RandomCharSub";
    case MethodId::QWERTYCharSub: return "QWERTYCharSub";
    case MethodId::RemoveStopWords: return "RemoveStopWords";
    case MethodId::T5DescToTitle: return "T5DescToTitle";
    case MethodId::RandomOrderSwap: return "RandomOrderSwap";
    case MethodId::BackTranslation: return "BackTranslation";
    case MethodId::T5QQP: return "T5QQP";
    case MethodId::WordEmbedSynSwap: return "WordEmbedSynSwap";
    case MethodId::WordNetSynSwap: return "WordNetSynSwap";
  }
  return "?";
}

MethodId method_from_string(std::string_view name) {
  for (MethodId m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown method: " + std::string(name));
}

std::string_view to_string(Validity v) {
  switch (v) {
    case Validity::AutoValid: return "AutoValid";
    case Validity::AutoInvalid: return "AutoInvalid";
    case Validity::NeedsAnnotation: return "NeedsAnnotation";
    case Validity::ManualValid: return "ManualValid";
    case Validity::ManualInvalid: return "ManualInvalid";
  }
  return "?";
}

Validity validity_from_string(std::string_view name) {
  for (Validity v : {Validity::AutoValid, Validity::AutoInvalid, Validity::NeedsAnnotation,
                     Validity::ManualValid, Validity::ManualInvalid}) {
    if (to_string(v) == name) return v;
  }
  throw std::invalid_argument("unknown validity: " + std::string(name));
}

std::string to_string(GenFailure f) {
  switch (f) {
    case GenFailure::NoEligibleTerm: return "NoEligibleTerm";
    case GenFailure::AllStopwords: return "AllStopwords";
    case GenFailure::InsufficientTokens: return "InsufficientTokens";
    case GenFailure::AdapterUnavailable: return "AdapterUnavailable";
    case GenFailure::AdapterMalformedResponse: return "AdapterMalformedResponse";
    case GenFailure::ResourceMissing: return "ResourceMissing";
  }
  return "?";
}

}  // namespace qvar
