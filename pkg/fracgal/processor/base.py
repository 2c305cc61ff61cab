from builtins import object
from logging import getLogger
from tqdm import tqdm


logger = getLogger('fracgal')


class Processor(object):
    """
    Runs independent jobs (solves at different discretisations, battery
    problems, Yosida indices) and collects their results in input order

    Parameters
    ----------
    progress : bool
        Whether to display a progress bar over the jobs
    desc : str | None
        Default description shown next to the progress bar
    """

    num_processes = 1

    def __init__(self, progress=False, desc=None):
        self._progress = progress
        self._desc = desc

    @property
    def progress(self):
        return self._progress

    def __repr__(self):
        return "{}(num_processes={})".format(type(self).__name__,
                                             self.num_processes)

    def __eq__(self, other):
        try:
            return (type(self) is type(other)
                    and self.num_processes == other.num_processes
                    and self._progress == other._progress)
        except AttributeError:
            return False

    def map(self, func, items, desc=None):
        """
        Applies 'func' to each item

        Parameters
        ----------
        func : callable
            The job, called with a single item
        items : iterable
            The job inputs
        desc : str | None
            Description shown next to the progress bar

        Returns
        -------
        results : list
            The results in the order of the items
        """
        items = list(items)
        logger.debug("Running {} jobs with {}".format(len(items), self))
        return self._map(func, items, desc if desc is not None
                         else self._desc)

    def _map(self, func, items, desc):
        raise NotImplementedError

    def _progress_bar(self, iterable, total, desc):
        return tqdm(iterable, desc=desc, total=total,
                    disable=not self._progress)
