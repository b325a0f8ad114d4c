use discrete_hilbert::{born_frequency, decode, encode, mean_std, BitString, DiscretisedQubit, Permutation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> discrete_hilbert::Result<()> {
    let q = DiscretisedQubit::new(3, 5, 8)?;
    let s = encode(&q)?;
    let (mu, sigma) = mean_std(&s);
    println!("{q} -> {s}  (Born frequency {}, μ = {mu}, σ = {sigma:.4})", born_frequency(&s));
    println!("decoded back: {}", decode(&s)?.qubit);

    // A global shuffle keeps the frequency but the string is no longer a codeword.
    let shuffled = Permutation::random(8, &mut ChaCha8Rng::seed_from_u64(1)).apply(&s)?;
    println!("shuffled {shuffled}: frequency {}, decode -> {:?}", born_frequency(&shuffled), decode(&shuffled).map(|d| d.qubit));

    let pole: BitString = "++++".parse()?;
    let d = decode(&pole)?;
    println!("{pole} -> {} (degenerate: {})", d.qubit, d.degenerate);
    Ok(())
}
