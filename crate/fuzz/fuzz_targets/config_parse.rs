#![no_main]

use libfuzzer_sys::fuzz_target;
use spinbundle_cli::config::ExperimentConfig;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(config) = ExperimentConfig::from_json(text) {
            let _ = config.state_descriptors();
            let _ = config.build_transformations();
        }
    }
});
