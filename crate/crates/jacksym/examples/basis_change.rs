//! Moving between power sums and monomials, products, and the α-deformed
//! inner product.

use jacksym::part;
use jacksym::symfun::{inner_product, mul};
use jacksym::SymFun;

fn main() {
    let p21 = SymFun::p(part![2, 1]);
    println!("p[2,1] = {}", p21.to_m());
    let m11 = SymFun::m(part![1, 1]);
    println!("m[1,1] = {}", m11.to_p());
    let prod = mul(&SymFun::m(part![1]), &m11);
    println!("m[1]·m[1,1] = {}", prod.to_m());
    println!("<p[2,1], p[2,1]> = {}", jacksym::alpha::ShowAlpha(&inner_product(&p21, &p21)));
    println!("<m[1,1], m[1,1]> = {}", jacksym::alpha::ShowAlpha(&inner_product(&m11, &m11)));
}
