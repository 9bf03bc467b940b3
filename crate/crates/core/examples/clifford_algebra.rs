//! Blade products, Clifford conjugation and the scalar part.

use qdirac::qclifford::{blade_mul, Blade, CliffordElement, Deformation};
use qdirac::{Result, ScalarQ};

fn main() -> Result<()> {
    let d = Deformation::Plus;
    let e1 = CliffordElement::generator(3, d, 1)?;
    let e2 = CliffordElement::generator(3, d, 2)?;
    println!("e1 e1 = {}", e1.mul(&e1)?);
    println!("e2 e1 = {}", e2.mul(&e1)?);
    println!("e1 e2 + q e2 e1 = {}", e1.mul(&e2)?.add(&e2.mul(&e1)?.scale(&ScalarQ::q()))?);

    // the normal-ordered blade product is not associative: search for a witness
    let blades = Blade::all(3);
    'search: for &a in &blades {
        for &b in &blades {
            for &c in &blades {
                let el = |x: Blade| CliffordElement::blade(3, d, x, ScalarQ::one());
                let left = el(a).mul(&el(b))?.mul(&el(c))?;
                let right = el(a).mul(&el(b).mul(&el(c))?)?;
                if left != right {
                    let t = |x: Blade| x.to_text(d);
                    println!("({} {}) {} = {left}", t(a), t(b), t(c));
                    println!("{} ({} {}) = {right}", t(a), t(b), t(c));
                    break 'search;
                }
            }
        }
    }

    let b = Blade::from_indices(&[1, 3])?;
    let (c, prod) = blade_mul(b, b, d);
    println!("e[1,3] e[1,3] = ({c})*{}", prod.to_text(d));

    let a = CliffordElement::blade(3, d, b, ScalarQ::one());
    println!("conj(e[1,3]) = {}", a.conjugate());
    println!("[conj(e[1,3]) e[1,3]]_0 = {}", a.conjugate().mul(&a)?.scalar_part());
    Ok(())
}
