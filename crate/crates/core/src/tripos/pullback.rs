use crate::error::{Error, Result};
use crate::heyting::Predicate;
use crate::topology::{
    product, product_with_cap, same_space, subspace, ContMap, FinSpace, PointSet, Product, Space,
    DEFAULT_POINT_CAP,
};

/// A commuting square
///
/// ```text
///   P ──top──▶ B
///   │          │
///  left      right
///   ▼          ▼
///   A ─bottom─▶ C
/// ```
///
/// that has been verified to be a pullback in finite spaces.
#[derive(Debug, Clone)]
pub struct PullbackSquare {
    pub top: ContMap,
    pub left: ContMap,
    pub right: ContMap,
    pub bottom: ContMap,
}

impl PullbackSquare {
    /// Checks that the square commutes and that the comparison map into the
    /// fibre product `A ×_C B` is a homeomorphism.
    pub fn new(top: ContMap, left: ContMap, right: ContMap, bottom: ContMap) -> Result<Self> {
        let shape_ok = same_space(top.dom(), left.dom())
            && same_space(top.cod(), right.dom())
            && same_space(left.cod(), bottom.dom())
            && same_space(right.cod(), bottom.cod());
        if !shape_ok {
            return Err(Error::Type("square maps do not line up".into()));
        }
        let square = PullbackSquare {
            top,
            left,
            right,
            bottom,
        };
        square.verify().map_err(Error::Type)?;
        Ok(square)
    }

    pub fn corner(&self) -> &Space {
        self.top.dom()
    }

    fn verify(&self) -> std::result::Result<(), String> {
        let p = self.corner();
        for x in 0..p.size() {
            let via_left = self.bottom.apply(self.left.apply(x));
            let via_top = self.right.apply(self.top.apply(x));
            if via_left != via_top {
                return Err(format!("square does not commute at {}", p.label(x)));
            }
        }
        let a = self.left.cod();
        let b = self.top.cod();
        let ab = product(a, b).map_err(|e| e.to_string())?;
        let fibre = PointSet::from_indices(
            ab.space.size(),
            (0..ab.space.size()).filter(|&q| {
                let c = ab.coords(q);
                self.bottom.apply(c[0]) == self.right.apply(c[1])
            }),
        );
        let (fibre_space, inclusion) = subspace(&ab.space, &fibre).map_err(|e| e.to_string())?;
        let position: Vec<usize> = {
            let mut pos = vec![usize::MAX; ab.space.size()];
            for (i, &q) in inclusion.table().iter().enumerate() {
                pos[q] = i;
            }
            pos
        };
        let table: Vec<usize> = (0..p.size())
            .map(|x| position[ab.index(&[self.left.apply(x), self.top.apply(x)])])
            .collect();
        let comparison = ContMap::new("cmp", p.clone(), fibre_space.clone(), table)
            .map_err(|e| format!("comparison map is not continuous: {e}"))?;
        if !comparison.is_bijective() {
            return Err(format!(
                "comparison {:?} into the fibre product of size {} is not a bijection",
                comparison.table(),
                fibre_space.size()
            ));
        }
        let mut inverse = vec![0; p.size()];
        for (x, &y) in comparison.table().iter().enumerate() {
            inverse[y] = x;
        }
        ContMap::new("cmp⁻¹", fibre_space, p.clone(), inverse)
            .map_err(|e| format!("inverse comparison is not continuous: {e}"))?;
        Ok(())
    }
}

/// The product-projection square along `k : Γ → Δ`:
///
/// ```text
///   X×Γ ──π_Γ──▶ Γ
///    │           │
///  id×k          k
///    ▼           ▼
///   X×Δ ──π_Δ──▶ Δ
/// ```
#[derive(Debug, Clone)]
pub struct BeckChevalleySquare {
    pub x: Space,
    pub k: ContMap,
    pub x_gamma: Product,
    pub x_delta: Product,
    pub square: PullbackSquare,
}

pub fn beck_chevalley_square(x: &Space, k: &ContMap) -> Result<BeckChevalleySquare> {
    beck_chevalley_square_with_cap(x, k, DEFAULT_POINT_CAP)
}

pub fn beck_chevalley_square_with_cap(
    x: &Space,
    k: &ContMap,
    cap: usize,
) -> Result<BeckChevalleySquare> {
    let x_gamma = product_with_cap(x, k.dom(), cap)?;
    let x_delta = product_with_cap(x, k.cod(), cap)?;
    let id_x = ContMap::identity(x);
    let id_times_k = x_gamma
        .map_factors(&[id_x, k.clone()], &x_delta)?
        .renamed(format!("id×{}", k.name()));
    let square = PullbackSquare::new(
        x_gamma.projections[1].clone().renamed("π_Γ"),
        id_times_k,
        k.clone(),
        x_delta.projections[1].clone().renamed("π_Δ"),
    )?;
    Ok(BeckChevalleySquare {
        x: x.clone(),
        k: k.clone(),
        x_gamma,
        x_delta,
        square,
    })
}

/// `χ_φ : Y → 2`, sending members of `φ` to `1`.
pub fn char_function(phi: &Predicate) -> Result<ContMap> {
    let y = phi.space();
    let table = (0..y.size()).map(|p| usize::from(phi.contains(p))).collect();
    ContMap::new(format!("χ{}", phi), y.clone(), FinSpace::two(), table)
}

/// The square exhibiting `⌊φ⌋ : φ ↪ Y` as the pullback of `t : 1 → 2` along `χ_φ`.
#[derive(Debug, Clone)]
pub struct ClassifierSquare {
    pub subspace: Space,
    pub square: PullbackSquare,
}

impl ClassifierSquare {
    pub fn inclusion(&self) -> &ContMap {
        &self.square.left
    }

    pub fn chi(&self) -> &ContMap {
        &self.square.bottom
    }

    pub fn truth(&self) -> &ContMap {
        &self.square.right
    }
}

pub fn classifier_square(phi: &Predicate) -> Result<ClassifierSquare> {
    let chi = char_function(phi)?;
    let two = chi.cod().clone();
    let one = FinSpace::terminal();
    let (sub, inclusion) = subspace(phi.space(), phi.extent())?;
    let bang = ContMap::to_terminal(&sub, &one)?;
    let t = ContMap::new("t", one, two, vec![1])?;
    let square = PullbackSquare::new(bang, inclusion, t, chi)?;
    Ok(ClassifierSquare {
        subspace: sub,
        square,
    })
}
