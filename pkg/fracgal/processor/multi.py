from concurrent.futures import ThreadPoolExecutor
from .base import Processor


class MultiProc(Processor):
    """
    Runs jobs concurrently on a pool of worker threads. The heavy lifting
    of the jobs is done in numpy/scipy, which release the interpreter lock

    Parameters
    ----------
    num_processes : int | None
        The number of workers to use (the executor's default if None)
    progress : bool
        Whether to display a progress bar over the jobs
    """

    def __init__(self, num_processes=None, **kwargs):
        super(MultiProc, self).__init__(**kwargs)
        self._num_processes = num_processes

    @property
    def num_processes(self):
        return self._num_processes

    def _map(self, func, items, desc):
        with ThreadPoolExecutor(max_workers=self._num_processes) as executor:
            return list(self._progress_bar(executor.map(func, items),
                                           len(items), desc))
