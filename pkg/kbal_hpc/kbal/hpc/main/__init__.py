from kbal.hpc.main.campaign import Campaign, kernel_spec_from_config, run_campaign

__all__ = ["Campaign", "kernel_spec_from_config", "run_campaign"]
