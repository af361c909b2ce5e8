from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.series.managers.series_manager import SeriesManager
from modules.series.managers.solver_manager import SolverManager
from modules.util.objects.settings import Settings


class SolverManagerFactory(FactoryInterface):
    """ Factory for creating solver manager object
    """
    def invoke(self, service_manager):
        settings: Settings = service_manager.get(Settings.__name__)
        return SolverManager(
            series_manager=service_manager.get(SeriesManager.__name__),
            strategy=settings.get_series_solver()
        )
