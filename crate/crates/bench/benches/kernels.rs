use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use zcenter_core::cohomology::{cup3, gamma, is_coboundary};
use zcenter_core::{enumerate_homomorphisms, FiniteGroup, ProfileMethod, TwistedGroupAlgebra};

fn cube_of_three() -> Arc<FiniteGroup> {
    let c3 = FiniteGroup::cyclic(3).unwrap();
    let g = FiniteGroup::direct_product(&FiniteGroup::direct_product(&c3, &c3).unwrap(), &c3).unwrap();
    Arc::new(g)
}

fn hom_enumeration(c: &mut Criterion) {
    let s5 = Arc::new(FiniteGroup::symmetric(5).unwrap());
    c.bench_function("endomorphisms of S5", |b| b.iter(|| enumerate_homomorphisms(&s5, &s5).unwrap().len()));
}

fn twisted_dixon(c: &mut Criterion) {
    let g = cube_of_three();
    let omega = cup3(&g, 0, 1, 2, 3).unwrap();
    let gam = gamma(&omega, g.from_coordinates(&[1, 0, 0]).unwrap()).unwrap();
    let algebra = TwistedGroupAlgebra::new(gam).unwrap();
    c.bench_function("twisted (Z/3)^3 via central extension", |b| {
        b.iter(|| algebra.irrep_profile_with(ProfileMethod::CentralExtension).unwrap())
    });
}

fn coboundary_solve(c: &mut Criterion) {
    let g = cube_of_three();
    let omega = cup3(&g, 0, 1, 2, 3).unwrap();
    let gam = gamma(&omega, g.from_coordinates(&[1, 0, 0]).unwrap()).unwrap();
    c.bench_function("coboundary decision for gamma on (Z/3)^3", |b| b.iter(|| is_coboundary(&gam).unwrap()));
}

criterion_group!(kernels, hom_enumeration, twisted_dixon, coboundary_solve);
criterion_main!(kernels);
