//! Family generation behind the `gen` subcommand.

use idom::families::{
    build_bad, build_troublesome, example_graph, extremal_family, random_bad_spec, BadGraphSpec,
    ExampleId, ExtremalId, FamilyError, TroublesomeKind,
};
use idom::SubcubicGraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Default attachment layout: every new unit hangs off a degree-two small
/// of the previous one, giving a path of units.
pub fn chain_attachments(k: usize) -> Vec<u32> {
    (2..=k as u32).map(|j| 5 * j - 8).collect()
}

fn resolve_spec(k: usize, attachments: Option<Vec<u32>>, seed: Option<u64>) -> BadGraphSpec {
    match (attachments, seed) {
        (Some(attachments), _) => BadGraphSpec { k, attachments },
        (None, Some(seed)) => random_bad_spec(&mut ChaCha8Rng::seed_from_u64(seed), k),
        (None, None) => BadGraphSpec { k, attachments: chain_attachments(k) },
    }
}

pub fn gen_bad(
    k: usize,
    attachments: Option<Vec<u32>>,
    seed: Option<u64>,
) -> Result<SubcubicGraph, FamilyError> {
    build_bad(&resolve_spec(k, attachments, seed)).map(|art| art.graph)
}

pub fn gen_troublesome(
    kind: TroublesomeKind,
    k: usize,
    attachments: Option<Vec<u32>>,
    seed: Option<u64>,
) -> Result<SubcubicGraph, FamilyError> {
    let spec = match (attachments, seed) {
        (None, Some(seed)) => {
            // The underlying bad graph must keep its root at degree one,
            // so random draws exclude specs that attach to it.
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            loop {
                let spec = random_bad_spec(&mut rng, k);
                if !spec.attachments.contains(&0) {
                    break spec;
                }
            }
        }
        (attachments, _) => resolve_spec(k, attachments, None),
    };
    build_troublesome(kind, &spec).map(|template| template.graph)
}

pub fn gen_example(id: ExampleId) -> SubcubicGraph {
    example_graph(id)
}

pub fn gen_extremal(id: ExtremalId, blocks: usize) -> Result<SubcubicGraph, FamilyError> {
    extremal_family(id, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use idom::recognition::{is_bad_graph, weight_report};

    #[test]
    fn chain_layout_is_valid() {
        assert_eq!(chain_attachments(1), Vec::<u32>::new());
        assert_eq!(chain_attachments(4), vec![2, 7, 12]);
        for k in 1..=6 {
            let g = gen_bad(k, None, None).unwrap();
            assert_eq!(g.n(), 5 * k + 1);
            let class = is_bad_graph(&g).unwrap().expect("member");
            assert_eq!(class.k, k);
            assert_eq!(weight_report(&g).margin, 0);
        }
    }

    #[test]
    fn seeded_draws_are_reproducible() {
        let a = gen_bad(4, None, Some(11)).unwrap();
        let b = gen_bad(4, None, Some(11)).unwrap();
        assert_eq!(a.edges(), b.edges());
        let t = gen_troublesome(TroublesomeKind::Type2, 2, None, Some(11)).unwrap();
        assert_eq!(t.n(), 12);
    }

    #[test]
    fn explicit_attachments_win() {
        let g = gen_bad(2, Some(vec![3]), Some(99)).unwrap();
        assert_eq!(g.degree(3), 3);
        assert!(gen_bad(2, Some(vec![9]), None).is_err());
    }
}
