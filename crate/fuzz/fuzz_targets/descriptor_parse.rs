#![no_main]

use libfuzzer_sys::fuzz_target;
use spinbundle::mass_shell::lift;
use spinbundle::states::{Wavepacket, WavepacketDescriptor};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(d) = WavepacketDescriptor::from_json(text) else {
        return;
    };
    // Without an amplitude the constructor integrates over a grid; skip that here.
    if d.amplitude.is_none() {
        return;
    }
    if let Ok(w) = Wavepacket::from_descriptor(&d, None) {
        if let Ok(p) = lift([0.1, -0.2, 0.3], d.m) {
            let _ = w.evaluate(&p);
        }
        let _ = serde_json::to_string(&w.descriptor());
    }
});
