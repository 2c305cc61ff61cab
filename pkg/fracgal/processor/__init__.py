from .base import Processor
from .single import SingleProc
from .multi import MultiProc


def get_processor(jobs=1, progress=False):
    "SingleProc for a single job, MultiProc with 'jobs' workers otherwise"
    if jobs is None or jobs > 1:
        return MultiProc(num_processes=jobs, progress=progress)
    return SingleProc(progress=progress)
