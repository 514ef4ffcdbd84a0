//! katgen <gimli|xoodyak|gimli-perm-vector> [max_len]
//!
//! Messages follow the LWC convention: Count = n (1-based), Msg = bytes 0..n-1.

use std::env;
use std::fmt::Write;

use gimli_permutation::{gimli, SIZE};
use xoodyak::{XoodyakCommon, XoodyakHash};

fn hex(b: &[u8]) -> String {
    let mut s = String::new();
    for x in b {
        write!(s, "{:02X}", x).unwrap();
    }
    s
}

fn gimli_bytes(state: &mut [u8; 48]) {
    let mut w = [0u32; SIZE];
    for i in 0..SIZE {
        w[i] = u32::from_le_bytes([state[4 * i], state[4 * i + 1], state[4 * i + 2], state[4 * i + 3]]);
    }
    gimli(&mut w);
    for i in 0..SIZE {
        state[4 * i..4 * i + 4].copy_from_slice(&w[i].to_le_bytes());
    }
}

// gimli24v1 hash mode of the LWC submission: 16-byte rate, pad byte 0x01, capacity bit in byte 47.
fn gimli_hash_lwc(msg: &[u8]) -> [u8; 32] {
    let mut st = [0u8; 48];
    let mut chunks = msg.chunks_exact(16);
    for c in &mut chunks {
        for i in 0..16 {
            st[i] ^= c[i];
        }
        gimli_bytes(&mut st);
    }
    let rem = chunks.remainder();
    for i in 0..rem.len() {
        st[i] ^= rem[i];
    }
    st[rem.len()] ^= 1;
    st[47] ^= 1;
    gimli_bytes(&mut st);
    let mut out = [0u8; 32];
    out[..16].copy_from_slice(&st[..16]);
    gimli_bytes(&mut st);
    out[16..].copy_from_slice(&st[..16]);
    out
}

fn xoodyak_hash(msg: &[u8]) -> [u8; 32] {
    let mut st = XoodyakHash::new();
    st.absorb(msg);
    let mut out = [0u8; 32];
    st.squeeze(&mut out);
    out
}

fn main() {
    let args: Vec<String> = env::args().collect();
    let which = args.get(1).map(String::as_str).unwrap_or("gimli");
    let max_len: usize = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(1024);

    if which == "gimli-perm-vector" {
        let mut w = [0u32; SIZE];
        for i in 0..SIZE as u32 {
            w[i as usize] = i.wrapping_mul(i).wrapping_mul(i).wrapping_add(i.wrapping_mul(0x9e3779b9));
        }
        gimli(&mut w);
        let v: Vec<String> = w.iter().map(|x| format!("{:08x}", x)).collect();
        println!("{}", v.join(" "));
        return;
    }

    let f: fn(&[u8]) -> [u8; 32] = match which {
        "gimli" => gimli_hash_lwc,
        "xoodyak" => xoodyak_hash,
        other => panic!("unknown target {}", other),
    };
    let msg: Vec<u8> = (0..max_len).map(|i| i as u8).collect();
    for n in 0..=max_len {
        println!("Count = {}", n + 1);
        println!("Msg = {}", hex(&msg[..n]));
        println!("MD = {}", hex(&f(&msg[..n])));
        println!();
    }
}
