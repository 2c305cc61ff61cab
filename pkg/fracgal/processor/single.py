from .base import Processor


class SingleProc(Processor):
    """
    Runs jobs sequentially in the calling thread

    Parameters
    ----------
    progress : bool
        Whether to display a progress bar over the jobs
    """

    num_processes = 1

    def _map(self, func, items, desc):
        return [func(i) for i in self._progress_bar(items, len(items), desc)]
