"""Walk through the task model: variables, actions, plans and the validator.

Builds a two-variable task by hand, tries a few plans against it, then
shows the text format round trip.
"""

from sasbp import (
    Action,
    BoundedQuery,
    PartialState,
    PlanningInstance,
    Variable,
    parse_instance,
    validate_plan,
    write_instance,
)


def main():
    lamp = Variable("lamp", ("off", "on"))
    door = Variable("door", ("closed", "open"))
    inst = PlanningInstance(
        variables=(lamp, door),
        actions=(
            Action("open_door", PartialState({}), PartialState({"door": "open"})),
            Action(
                "flip",
                PartialState({"door": "open"}),
                PartialState({"lamp": "on"}),
            ),
        ),
        init=PartialState({"lamp": "off", "door": "closed"}),
        goal=PartialState({"lamp": "on"}),
    )
    print("task: turn the lamp on, but the switch sits behind a door")
    print(f"  variables: {[v.name for v in inst.variables]}")
    print(f"  init: {dict(inst.init)}")
    print(f"  goal: {dict(inst.goal)}")
    print()

    for plan in (("flip",), ("open_door",), ("open_door", "flip")):
        report = validate_plan(inst, plan)
        verdict = "valid" if report.valid else f"invalid ({report.reason})"
        print(f"  plan {plan}: {verdict}")
    print()

    query = BoundedQuery(inst, 2)
    text = write_instance(query)
    print("canonical file form:")
    for line in text.splitlines():
        print("    " + line)
    again = parse_instance(text)
    print(f"parse(write(query)) == query: {again == query}")


if __name__ == "__main__":
    main()
