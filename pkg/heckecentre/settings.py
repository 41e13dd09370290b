# -*- coding: utf-8 -*-


_supported = set()

show_progress = False # set by the CLI (--progress); progress bars need tqdm as well

max_workers = None # worker processes for the direct oracle; set by the CLI (--threads)

def get_supported_modules():
    try:
        from importlib import metadata
        global _supported
        _supported = {dist.metadata["Name"].lower() for dist in metadata.distributions()
                                                    if dist.metadata["Name"]}
    except ImportError:
        print("importlib.metadata not available; can't ascertain support of external modules.")


get_supported_modules() # find installed libraries (optional requirements for progress bars, symbolic checks)
