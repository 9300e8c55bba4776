#pragma once

#include <deque>
#include <functional>
#include <vector>

#include "qell/group.hpp"

namespace qell {

/// A verified homomorphism between enumerated groups, stored as a total
/// map on element indices.
class GroupHom {
 public:
  static GroupHom from_generator_images(GroupPtr domain, GroupPtr codomain, const std::vector<Permutation>& images) {
    require(images.size() == domain->generators().size(), ErrorKind::precondition,
            "need one image per generator of " + domain->name());
    for (const auto& im : images)
      require(codomain->contains(im), ErrorKind::precondition, "image not in codomain " + codomain->name());
    std::vector<int> img(domain->order(), -1);
    img[0] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < images.size(); ++s) {
        int y = domain->index_of(domain->generators()[s] * domain->element(x));
        int cand = codomain->index_of(images[s] * codomain->element(img[x]));
        if (img[y] < 0) {
          img[y] = cand;
          queue.push_back(y);
        } else if (img[y] != cand) {
          fail(ErrorKind::precondition, "image undefined: generator images do not extend consistently");
        }
      }
    }
    return GroupHom(std::move(domain), std::move(codomain), std::move(img));
  }

  static GroupHom from_function(GroupPtr domain, GroupPtr codomain,
                                const std::function<Permutation(const Permutation&)>& f) {
    std::vector<int> img(domain->order());
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = codomain->index_of(f(domain->element(static_cast<int>(i))));
      require(img[i] >= 0, ErrorKind::precondition, "image not in codomain " + codomain->name());
    }
    return GroupHom(std::move(domain), std::move(codomain), std::move(img));
  }

  static GroupHom identity(const GroupPtr& g) {
    return from_function(g, g, [](const Permutation& p) { return p; });
  }

  static GroupHom inclusion(const GroupPtr& sub, const GroupPtr& g) {
    require(sub->is_subgroup_of(*g), ErrorKind::precondition, sub->name() + " is not a subgroup of " + g->name());
    return from_function(sub, g, [](const Permutation& p) { return p; });
  }

  const GroupPtr& domain() const noexcept { return domain_; }
  const GroupPtr& codomain() const noexcept { return codomain_; }
  int image_index(int i) const { return image_[i]; }
  const Permutation& operator()(const Permutation& p) const {
    int i = domain_->index_of(p);
    require(i >= 0, ErrorKind::precondition, "element not in domain " + domain_->name());
    return codomain_->element(image_[i]);
  }

  std::vector<Permutation> kernel() const {
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] == 0) out.push_back(domain_->element(static_cast<int>(i)));
    return out;
  }

  /// (*this) after `first`: x -> this(first(x)).
  GroupHom after(const GroupHom& first) const {
    require(first.codomain_->same_elements(*domain_), ErrorKind::precondition, "homomorphisms do not compose");
    std::vector<int> img(first.image_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = image_[first.image_[i]];
    return GroupHom(first.domain_, codomain_, std::move(img));
  }

 private:
  GroupHom(GroupPtr d, GroupPtr c, std::vector<int> img)
      : domain_(std::move(d)), codomain_(std::move(c)), image_(std::move(img)) {
    verify();
  }

  void verify() const {
    require(image_[0] == 0, ErrorKind::precondition, "not a homomorphism: identity not preserved");
    const std::size_t n = domain_->order();
    if (n * n <= 1'000'000) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          int ab = domain_->mul(static_cast<int>(a), static_cast<int>(b));
          if (image_[ab] != codomain_->mul(image_[a], image_[b]))
            fail(ErrorKind::precondition, "not a homomorphism");
        }
      return;
    }
    // f(s x) = f(s) f(x) for generators s and all x implies the full property.
    for (const auto& s : domain_->generators()) {
      int si = domain_->index_of(s);
      for (std::size_t x = 0; x < n; ++x) {
        int sx = domain_->mul(si, static_cast<int>(x));
        if (image_[sx] != codomain_->mul(image_[si], image_[x])) fail(ErrorKind::precondition, "not a homomorphism");
      }
    }
  }

  GroupPtr domain_, codomain_;
  std::vector<int> image_;
};

}  // namespace qell
