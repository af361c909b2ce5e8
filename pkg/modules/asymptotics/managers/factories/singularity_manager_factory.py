from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.asymptotics.managers.singularity_manager import SingularityManager
from modules.series.managers.solver_manager import SolverManager
from modules.util.objects.settings import Settings


class SingularityManagerFactory(FactoryInterface):
    """ Factory for creating singularity manager object
    """
    def invoke(self, service_manager):
        settings: Settings = service_manager.get(Settings.__name__)
        return SingularityManager(
            solver_manager=service_manager.get(SolverManager.__name__),
            working_dps=settings.get_working_dps(),
            fit_low=settings.get_fit_low(),
            fit_high=settings.get_fit_high()
        )
