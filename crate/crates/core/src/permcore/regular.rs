use crate::error::Result;

use super::{Caps, PermGroup, Permutation};

/// Beyond this many generators the search first drops redundant ones.
const MAX_SIGN_GENERATORS: usize = 12;

/// Searches for a regular subgroup of a transitive group with `|G| = 2n`.
///
/// Such a subgroup has index 2, so it is the kernel of a homomorphism
/// `G → Z/2`. Each homomorphism is fixed by the signs of the generators;
/// every sign assignment is extended along the BFS words and kept only if it
/// respects right multiplication by every generator (which makes it a
/// homomorphism on the whole group). The first kernel on which only the
/// identity has fixed points is returned.
pub fn find_regular_subgroup(group: &PermGroup) -> Result<Option<PermGroup>> {
    let n = group.degree();
    if n == 0 || group.order() != 2 * n || !group.is_transitive() {
        return Ok(None);
    }
    let caps = Caps {
        group: group.order(),
        degree: n,
    };
    let reduced;
    let group = if group.generators().len() > MAX_SIGN_GENERATORS {
        reduced = PermGroup::generate(n, group.irredundant_generators(&caps)?, &caps)?;
        &reduced
    } else {
        group
    };

    let gens = group.generators();
    let gen_idx: Vec<usize> = gens.iter().map(|g| group.index_of(g).unwrap()).collect();
    for mask in 1u32..(1u32 << gens.len()) {
        let bit = |g: usize| (mask >> g) & 1 == 1;
        let mut sign = vec![false; group.order()];
        for (i, p) in group.parents().iter().enumerate() {
            if let Some((parent, g)) = *p {
                sign[i] = sign[parent] ^ bit(g);
            }
        }
        let homomorphic = (0..group.order()).all(|x| {
            gen_idx
                .iter()
                .enumerate()
                .all(|(g, &gi)| sign[group.product(x, gi)] == sign[x] ^ bit(g))
        });
        if !homomorphic {
            continue;
        }
        let kernel: Vec<Permutation> = group
            .elements()
            .iter()
            .zip(&sign)
            .filter(|(_, &s)| !s)
            .map(|(e, _)| e.clone())
            .collect();
        if kernel.len() != n {
            continue;
        }
        let free = kernel
            .iter()
            .all(|k| k.is_identity() || (0..n).all(|x| k.apply(x) != x));
        if free {
            return Ok(Some(PermGroup::from_members(n, &kernel, &caps)?));
        }
    }
    Ok(None)
}
