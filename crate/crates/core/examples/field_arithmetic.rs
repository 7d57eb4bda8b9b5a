//! GF(q) and GF(q^3): tables, Frobenius, trace and norm.

use subspace_codes::fields::{gf, gf3};

fn main() -> subspace_codes::Result<()> {
    let f = gf(9)?;
    println!("GF(9): char {}, 3 * 5 = {}, 5^-1 = {}", f.characteristic(), f.mul(3, 5), f.inv(5));

    for q in [2, 3, 4] {
        let ef = gf3(q)?;
        println!("GF({}) over GF({q}), modulus {:?}", ef.order(), ef.modulus());
        let x = ef.elements().nth(5).unwrap();
        let xq = ef.frobenius(x);
        println!("  x = {}  x^q = {}  Tr(x) = {}  N(x) = {}", x.0, xq.0, ef.trace(x), ef.norm(x));
        // trace and norm are the sum and product of the conjugates
        let x2 = ef.frobenius(xq);
        assert_eq!(ef.embed(ef.trace(x)), ef.add(ef.add(x, xq), x2));
        assert_eq!(ef.embed(ef.norm(x)), ef.mul(ef.mul(x, xq), x2));
        let basis: Vec<u16> = ef.basis().iter().map(|b| b.0).collect();
        println!("  basis {basis:?}, coords(x) = {:?}", ef.coords(x));
    }
    Ok(())
}
