#include "robomendel/genetics.hpp"

#include <algorithm>
#include <sstream>

namespace robomendel::genetics {

namespace {

AllelePair sorted_pair(AllelePair p) {
    if (p.second < p.first) std::swap(p.first, p.second);
    return p;
}

std::vector<std::string> organism_phenotypes(const Organism& o, const WorldConfig& w) {
    std::vector<std::string> labels;
    labels.reserve(w.loci.size());
    for (const auto& locus : w.loci) {
        labels.push_back(locus.phenotype_of(o.alleles_at(locus.id)));
    }
    return labels;
}

// Species-typical genotype: homozygous in the first-listed allele of each
// locus (the common form; recessive variants are carried, not typical).
std::map<std::string, AllelePair> typical_genotype(const WorldConfig& w) {
    std::map<std::string, AllelePair> g;
    for (const auto& locus : w.loci) {
        g[locus.id] = {locus.alleles.first, locus.alleles.first};
    }
    return g;
}

Organism make_pea(const WorldConfig& w, std::map<std::string, AllelePair> genotype, Rng& rng) {
    Organism o;
    o.species_id = "pea";
    o.genotype = std::move(genotype);
    o.traits = sample_traits(organism_phenotypes(o, w), w, rng);
    return o;
}

}  // namespace

Locus::Locus(std::string id_, AllelePair alleles_, std::map<AllelePair, std::string> dominance_)
    : id(std::move(id_)), alleles(std::move(alleles_)) {
    for (auto& [pair, phenotype] : dominance_) {
        dominance[sorted_pair(pair)] = phenotype;
    }
    const std::vector<AllelePair> all = {
        sorted_pair({alleles.first, alleles.first}),
        sorted_pair({alleles.first, alleles.second}),
        sorted_pair({alleles.second, alleles.second}),
    };
    for (const auto& pair : all) {
        if (!dominance.count(pair)) {
            throw InvalidArgumentError("locus " + id + " dominance map is not total: missing " +
                                       pair.first + "/" + pair.second);
        }
    }
}

const std::string& Locus::phenotype_of(const AllelePair& pair) const {
    const auto it = dominance.find(sorted_pair(pair));
    if (it == dominance.end()) {
        throw InvalidArgumentError("locus " + id + " has no phenotype for " + pair.first + "/" +
                                   pair.second);
    }
    return it->second;
}

const AllelePair& Organism::alleles_at(const std::string& locus_id) const {
    const auto it = genotype.find(locus_id);
    if (it == genotype.end()) {
        throw InvalidArgumentError("organism has no genotype at locus " + locus_id);
    }
    return it->second;
}

WorldConfig WorldConfig::standard_pea_world() {
    WorldConfig w;
    w.loci = {
        Locus("flower-color", {"pu", "wh"},
              {{{"pu", "pu"}, "Pu"}, {{"pu", "wh"}, "Pu"}, {{"wh", "wh"}, "Wh"}}),
        Locus("seed-shape", {"rd", "wr"},
              {{{"rd", "rd"}, "Rd"}, {{"rd", "wr"}, "Rd"}, {{"wr", "wr"}, "Wr"}}),
    };
    // Divergent phenotypes sit 10 standard deviations from the common form
    // on their own axis; every model has unit sd.
    w.trait_models = {
        {"Pu", GaussianTraitModel(0.0, 1.0)},
        {"Wh", GaussianTraitModel(10.0, 1.0)},
        {"Rd", GaussianTraitModel(0.0, 1.0)},
        {"Wr", GaussianTraitModel(10.0, 1.0)},
    };
    return w;
}

const Locus& WorldConfig::locus(const std::string& id) const {
    for (const auto& l : loci) {
        if (l.id == id) return l;
    }
    throw InvalidArgumentError("world has no locus " + id);
}

Organism make_purple_plant(const WorldConfig& w, Rng& rng) {
    return make_pea(w, typical_genotype(w), rng);
}

Organism make_purple_carrier(const WorldConfig& w, Rng& rng) {
    auto g = typical_genotype(w);
    if (w.loci.size() > 1) {
        const auto& hidden = w.loci[1];
        g[hidden.id] = {hidden.alleles.first, hidden.alleles.second};
    }
    return make_pea(w, std::move(g), rng);
}

Organism make_white_plant(const WorldConfig& w, Rng& rng) {
    auto g = typical_genotype(w);
    const auto& flower = w.loci.front();
    g[flower.id] = {flower.alleles.second, flower.alleles.second};
    return make_pea(w, std::move(g), rng);
}

Organism make_hybrid_plant(const WorldConfig& w, Rng& rng) {
    auto g = typical_genotype(w);
    const auto& flower = w.loci.front();
    g[flower.id] = {flower.alleles.first, flower.alleles.second};
    return make_pea(w, std::move(g), rng);
}

Organism make_mouse() { return Organism{"mouse", {}, {}}; }
Organism make_lion() { return Organism{"lion", {}, {}}; }

std::optional<std::string> flower_phenotype(const Organism& o, const WorldConfig& w) {
    if (w.loci.empty()) return std::nullopt;
    const auto& flower = w.loci.front();
    if (!o.genotype.count(flower.id)) return std::nullopt;
    return flower.phenotype_of(o.alleles_at(flower.id));
}

std::vector<double> sample_traits(const std::vector<std::string>& phenotype_labels,
                                  const WorldConfig& w, Rng& rng) {
    std::vector<double> traits;
    traits.reserve(static_cast<std::size_t>(w.trait_dims));
    for (int axis = 0; axis < w.trait_dims; ++axis) {
        if (axis < static_cast<int>(phenotype_labels.size())) {
            const auto& label = phenotype_labels[static_cast<std::size_t>(axis)];
            const auto it = w.trait_models.find(label);
            if (it == w.trait_models.end()) {
                throw UnknownPhenotypeError("no trait model for phenotype " + label);
            }
            traits.push_back(rng.normal(it->second.mean, it->second.sd));
        } else {
            traits.push_back(rng.normal(0.0, 1.0));
        }
    }
    return traits;
}

std::vector<Organism> cross(const Organism& mother, const Organism& father, const WorldConfig& w,
                            Rng& rng) {
    // One weather draw per cross event: a washout empties the whole planting.
    if (w.p_bad_weather > 0.0 && rng.bernoulli(w.p_bad_weather)) return {};
    if (mother.species_id != father.species_id) return {};

    std::vector<Organism> offspring;
    offspring.reserve(static_cast<std::size_t>(w.seeds_per_cross));
    for (int i = 0; i < w.seeds_per_cross; ++i) {
        Organism child;
        child.species_id = mother.species_id;
        switch (w.inheritance_model) {
            case InheritanceModel::LFLS:
                child.genotype = typical_genotype(w);
                break;
            case InheritanceModel::OneParent:
                child.genotype = father.genotype;
                break;
            case InheritanceModel::Transmission:
                for (const auto& locus : w.loci) {
                    const auto& ma = mother.alleles_at(locus.id);
                    const auto& fa = father.alleles_at(locus.id);
                    const std::string from_mother = rng.bernoulli(0.5) ? ma.first : ma.second;
                    const std::string from_father = rng.bernoulli(0.5) ? fa.first : fa.second;
                    child.genotype[locus.id] = {from_mother, from_father};
                }
                break;
        }
        child.traits = sample_traits(organism_phenotypes(child, w), w, rng);
        offspring.push_back(std::move(child));
    }
    return offspring;
}

std::vector<Organism> self_cross(const Organism& a, const WorldConfig& w, Rng& rng) {
    return cross(a, a, w, rng);
}

const std::vector<std::string>& standard_design_ids() {
    static const std::vector<std::string> ids = {
        "mouse-x-lion",  "wh-x-wh",  "wh-x-pu", "wh-x-pu-swap", "pu-x-pu-swap",
        "pu-x-pu-self",  "hy-x-hy",  "hy-x-wh", "hy-x-pu",
    };
    return ids;
}

ObservationSample run_design(const std::string& design_id, const WorldConfig& w, Rng& rng) {
    // Which axis is observed: flower color for the crosses, the hidden locus
    // phenotype for the self-cross trait screen.
    std::size_t observed_locus = 0;
    std::vector<Organism> progeny;

    if (design_id == "mouse-x-lion") {
        progeny = cross(make_mouse(), make_lion(), w, rng);
    } else if (design_id == "wh-x-wh") {
        const auto white = make_white_plant(w, rng);
        progeny = self_cross(white, w, rng);
    } else if (design_id == "wh-x-pu") {
        const auto white = make_white_plant(w, rng);
        const auto purple = make_purple_plant(w, rng);
        progeny = cross(white, purple, w, rng);
    } else if (design_id == "wh-x-pu-swap") {
        const auto white = make_white_plant(w, rng);
        const auto purple = make_purple_plant(w, rng);
        progeny = cross(purple, white, w, rng);  // reversed orientation
    } else if (design_id == "pu-x-pu-swap") {
        const auto a = make_purple_plant(w, rng);
        const auto b = make_purple_plant(w, rng);
        progeny = cross(a, b, w, rng);
    } else if (design_id == "pu-x-pu-self") {
        const auto carrier = make_purple_carrier(w, rng);
        progeny = self_cross(carrier, w, rng);
        observed_locus = w.loci.size() > 1 ? 1 : 0;
    } else if (design_id == "hy-x-hy") {
        const auto a = make_hybrid_plant(w, rng);
        const auto b = make_hybrid_plant(w, rng);
        progeny = cross(a, b, w, rng);
    } else if (design_id == "hy-x-wh") {
        const auto hy = make_hybrid_plant(w, rng);
        const auto white = make_white_plant(w, rng);
        progeny = cross(hy, white, w, rng);
    } else if (design_id == "hy-x-pu") {
        const auto hy = make_hybrid_plant(w, rng);
        const auto purple = make_purple_plant(w, rng);
        progeny = cross(hy, purple, w, rng);
    } else {
        throw UnknownDesignError("unknown design id: " + design_id);
    }

    // An affected plot flips every plant growing in it.
    const bool env_flip = w.p_env_factor > 0.0 && rng.bernoulli(w.p_env_factor);

    std::vector<std::string> labels;
    std::vector<std::string> tags;
    labels.reserve(progeny.size());
    tags.reserve(progeny.size());
    for (std::size_t i = 0; i < progeny.size(); ++i) {
        const Locus& locus = w.loci.at(observed_locus);
        std::string label = locus.phenotype_of(progeny[i].alleles_at(locus.id));
        if (env_flip && observed_locus == 0) label = w.env_flip_phenotype;
        labels.push_back(std::move(label));
        std::ostringstream tag;
        tag << design_id << "/seed-" << i;
        tags.push_back(tag.str());
    }
    return ObservationSample::of_labels(std::move(labels), std::move(tags));
}

}  // namespace robomendel::genetics
