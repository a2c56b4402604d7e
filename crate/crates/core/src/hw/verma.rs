//! Verma-module words and the Shapovalov form by direct rewriting.
//!
//! Independent of the level-by-level engine: every Gram entry is obtained by
//! pushing raising operators through a word until only `v_λ` is left.

use std::collections::BTreeMap;

use num::Zero;

use super::engine::Word;
use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;
use crate::exact::scalar::{self, Scalar};
use crate::lie::roots::RootSystem;

/// Weight of `f_{w_1}···f_{w_k} v_λ` in fundamental coordinates.
pub fn word_weight(rs: &RootSystem, lambda: &[i64], word: &[usize]) -> Vec<i64> {
    let mut w = lambda.to_vec();
    for &j in word {
        for (i, x) in w.iter_mut().enumerate() {
            *x -= rs.cartan_entry(i, j);
        }
    }
    w
}

/// All words of length at most `depth_cap`, grouped by weight, each group
/// sorted lexicographically. Groups are listed by depth, then by weight in
/// descending lexicographic order.
pub fn verma_weight_basis(rs: &RootSystem, lambda: &[i64], depth_cap: usize) -> Result<Vec<(Vec<i64>, Vec<Word>)>> {
    rs.check_dominant(lambda)?;
    let lowest = rs.lowest_weight_depth(lambda) as usize;
    if depth_cap < lowest {
        return Err(Error::Invalid(format!(
            "depth cap {depth_cap} is below the lowest-weight depth {lowest}"
        )));
    }
    let r = rs.rank();
    let mut groups: BTreeMap<(usize, std::cmp::Reverse<Vec<i64>>), Vec<Word>> = BTreeMap::new();
    let mut frontier: Vec<Word> = vec![Vec::new()];
    for depth in 0..=depth_cap {
        for w in &frontier {
            let wt = word_weight(rs, lambda, w);
            groups.entry((depth, std::cmp::Reverse(wt))).or_default().push(w.clone());
        }
        if depth == depth_cap {
            break;
        }
        frontier = frontier
            .iter()
            .flat_map(|w| (0..r).map(move |j| std::iter::once(j).chain(w.iter().copied()).collect()))
            .collect();
    }
    Ok(groups
        .into_iter()
        .map(|((_, std::cmp::Reverse(wt)), mut words)| {
            words.sort();
            (wt, words)
        })
        .collect())
}

type Combination = BTreeMap<Word, Scalar>;

/// `e_i` applied to `f_{w_1}···f_{w_k} v_λ` inside the Verma module.
fn raise(rs: &RootSystem, lambda: &[i64], i: usize, word: &[usize]) -> Combination {
    let mut out = Combination::new();
    for pos in 0..word.len() {
        if word[pos] != i {
            continue;
        }
        // e_i commutes past f_{w_1..w_{pos-1}} and meets f_i: leaves h_i on the tail
        let tail = &word[pos + 1..];
        let h = word_weight(rs, lambda, tail)[i];
        if h == 0 {
            continue;
        }
        let mut rest: Word = word[..pos].to_vec();
        rest.extend_from_slice(tail);
        *out.entry(rest).or_insert_with(Scalar::zero) += scalar::int(h);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `S(u v_λ, w v_λ)` for two words.
pub fn shapovalov_pairing(rs: &RootSystem, lambda: &[i64], u: &[usize], w: &[usize]) -> Scalar {
    if u.len() != w.len() {
        return Scalar::zero();
    }
    let mut current: Combination = BTreeMap::from([(w.to_vec(), scalar::int(1))]);
    for &j in u {
        let mut next = Combination::new();
        for (word, c) in &current {
            for (t, d) in raise(rs, lambda, j, word) {
                *next.entry(t).or_insert_with(Scalar::zero) += c * d;
            }
        }
        next.retain(|_, c| !c.is_zero());
        current = next;
    }
    current.remove(&Vec::new()).unwrap_or_else(Scalar::zero)
}

/// Gram matrix of the Shapovalov form on the given words.
pub fn gram_of_words(rs: &RootSystem, lambda: &[i64], words: &[Word]) -> Matrix {
    Matrix::from_fn(words.len(), words.len(), |a, b| shapovalov_pairing(rs, lambda, &words[a], &words[b]))
}

/// Gram matrix of the Verma weight space `M(λ)_ν` on all words of weight `ν`.
pub fn shapovalov_gram(rs: &RootSystem, lambda: &[i64], weight: &[i64]) -> Result<Matrix> {
    let r = rs.rank();
    let cartan = Matrix::from_fn(r, r, |i, j| scalar::int(rs.cartan_entry(i, j)));
    let diff = Matrix::from_fn(r, 1, |i, _| scalar::int(lambda[i] - weight[i]));
    let coeffs = cartan
        .solve(&diff)
        .ok_or_else(|| Error::Internal("Cartan matrix is singular".into()))?;
    let mut content = Vec::with_capacity(r);
    for i in 0..r {
        let c = coeffs.get(i, 0);
        if !scalar::is_integer(c) || c < &Scalar::zero() {
            return Err(Error::Invalid(format!("{weight:?} is not below {lambda:?}")));
        }
        content.push(c.to_integer().try_into().map_err(|_| Error::Invalid("weight too deep".into()))?);
    }
    let words = words_with_content(&content);
    Ok(gram_of_words(rs, lambda, &words))
}

/// Distinct words using letter `j` exactly `content[j]` times, sorted.
pub fn words_with_content(content: &[usize]) -> Vec<Word> {
    fn go(content: &mut [usize], prefix: &mut Word, out: &mut Vec<Word>) {
        if content.iter().all(|&c| c == 0) {
            out.push(prefix.clone());
            return;
        }
        for j in 0..content.len() {
            if content[j] > 0 {
                content[j] -= 1;
                prefix.push(j);
                go(content, prefix, out);
                prefix.pop();
                content[j] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut content.to_vec(), &mut Vec::new(), &mut out);
    out
}
